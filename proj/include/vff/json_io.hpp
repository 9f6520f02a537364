#pragma once

/*
 * JSON encodings (exact round-trip) and DOT exports.
 *
 * Scalar:      {"re":{"num":[[coeff,g_exp,a_exp],...],"den":[...]},"im":{...}}
 *              with coeff a decimal rational string; terms leading-first.
 * FockVector:  {"terms":[{"phi":[[n,k_n],...],"coeff":<Scalar>},...]}
 * Partition:   [3,1]
 * Matrix:      {"rows":[...],"cols":[...],"entries":[[<Scalar>,...],...]}
 */

#include <json.hpp>

#include <sstream>
#include <string>

#include "vff/errors.hpp"
#include "vff/fock.hpp"
#include "vff/matrix.hpp"
#include "vff/partition.hpp"
#include "vff/polerec.hpp"
#include "vff/scalar.hpp"
#include "vff/structure.hpp"

namespace vff {

using Json = nlohmann::ordered_json;

// --- encoding ---

inline Json to_json(const BivariatePoly& p) {
    Json terms = Json::array();
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        terms.push_back(Json::array({it->coeff.str(), it->exp.gamma, it->exp.alpha}));
    return terms;
}

inline Json to_json(const PolyFraction& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline Json to_json(const Scalar& x) {
    return Json{{"re", to_json(x.re())}, {"im", to_json(x.im())}};
}

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (auto c : p.columns()) a.push_back(c);
    return a;
}

inline Json to_json(const FockVector& v) {
    Json terms = Json::array();
    for (const auto& [k, c] : v.terms()) {
        Json phi = Json::array();
        for (auto [n, kn] : k.multiplicities()) phi.push_back(Json::array({n, kn}));
        terms.push_back(Json{{"phi", phi}, {"coeff", to_json(c)}});
    }
    return Json{{"terms", terms}};
}

inline Json to_json(const ScalarMatrix& m) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& p : m.row_index) rows.push_back(to_json(p));
    for (const auto& p : m.col_index) cols.push_back(to_json(p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(row);
    }
    return Json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

inline Json to_json(const SingularVectorResult& sv) {
    Json sigma = Json::array();
    for (const auto& [nu, c] : sv.sigma)
        sigma.push_back(Json{{"nu", to_json(nu)}, {"coeff", to_json(c)}});
    return Json{{"r", sv.r},
                {"s", sv.s},
                {"sigma", sigma},
                {"realized_at_dual", to_json(sv.realized_at_dual)},
                {"realized_at_kac", to_json(sv.realized_at_kac)}};
}

inline Json to_json(const IntegralType& t) {
    return Json{{"singular", to_json(t.singular)}, {"smooth", t.smooth_count}};
}

inline Json to_json(const ReductionNode& node) {
    Json j{{"type", to_json(node.type)}};
    switch (node.terminal) {
        case ReductionNode::Terminal::EmptyType: j["terminal"] = "empty"; break;
        case ReductionNode::Terminal::RectangleBase: j["terminal"] = "rectangle"; break;
        case ReductionNode::Terminal::None: j["terminal"] = nullptr; break;
    }
    if (node.factor) j["factor"] = Json::array({node.factor->first, node.factor->second});
    Json children = Json::array();
    for (const auto& [labels, child] : node.children) {
        Json ls = Json::array();
        for (auto l : labels) ls.push_back(term_name(l));
        children.push_back(Json{{"terms", ls}, {"node", to_json(*child)}});
    }
    if (!children.empty()) j["children"] = children;
    return j;
}

// --- decoding ---

inline BivariatePoly poly_from_json(const Json& j) {
    BivariatePoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("bad polynomial term");
        p += BivariatePoly::monomial(Rational::from_string(t[0].get<std::string>()),
                                     t[1].get<std::uint32_t>(), t[2].get<std::uint32_t>());
    }
    return p;
}

inline PolyFraction fraction_from_json(const Json& j) {
    return PolyFraction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline Scalar scalar_from_json(const Json& j) {
    return Scalar(fraction_from_json(j.at("re")), fraction_from_json(j.at("im")));
}

inline Partition partition_from_json(const Json& j) {
    std::vector<std::uint32_t> cols;
    for (const auto& c : j) cols.push_back(c.get<std::uint32_t>());
    return Partition(std::move(cols));
}

inline FockVector fock_from_json(const Json& j) {
    FockVector v;
    for (const auto& t : j.at("terms")) {
        std::map<std::uint32_t, std::uint32_t> mult;
        for (const auto& pair : t.at("phi"))
            mult[pair[0].get<std::uint32_t>()] = pair[1].get<std::uint32_t>();
        v.add_term(Partition::from_multiplicities(mult), scalar_from_json(t.at("coeff")));
    }
    return v;
}

inline ScalarMatrix matrix_from_json(const Json& j) {
    const auto& entries = j.at("entries");
    const std::size_t rows = entries.size();
    const std::size_t cols = rows == 0 ? 0 : entries[0].size();
    ScalarMatrix m(rows, cols);
    for (const auto& p : j.at("rows")) m.row_index.push_back(partition_from_json(p));
    for (const auto& p : j.at("cols")) m.col_index.push_back(partition_from_json(p));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(entries[i][k]);
    return m;
}

// --- DOT exports ---

// Elementary-move graph of the level-N partition poset.
inline std::string poset_dot(std::uint32_t level) {
    std::ostringstream os;
    os << "digraph poset_" << level << " {\n";
    const auto parts = enumerate_level(level);
    for (const auto& p : parts) os << "  \"" << p.str() << "\";\n";
    for (const auto& p : parts) {
        std::set<Partition> targets;
        for (std::uint32_t j = 1; j <= p.length(); ++j) {
            const Partition q = tau(j, p);
            if (q != p) targets.insert(q);
        }
        for (const auto& q : targets) os << "  \"" << p.str() << "\" -> \"" << q.str() << "\";\n";
    }
    os << "}\n";
    return os.str();
}

// Reduction DAG: nodes are types annotated with the cleared factor,
// edges carry the originating terms.
inline std::string reduction_dot(const ReductionNode& root) {
    std::ostringstream os;
    os << "digraph reduction {\n";
    std::set<const ReductionNode*> seen;
    auto walk = [&](auto&& self, const ReductionNode* n) -> void {
        if (!seen.insert(n).second) return;
        os << "  \"" << n->type.str() << "\" [label=\"" << n->type.str();
        if (n->factor) os << "\\nfactor (" << n->factor->first << "," << n->factor->second << ")";
        if (n->terminal == ReductionNode::Terminal::EmptyType) os << "\\nempty";
        if (n->terminal == ReductionNode::Terminal::RectangleBase) os << "\\nrectangle base";
        os << "\"];\n";
        for (const auto& [labels, child] : n->children) {
            os << "  \"" << n->type.str() << "\" -> \"" << child->type.str() << "\" [label=\"";
            bool first = true;
            for (auto l : labels) {
                if (!first) os << ",";
                first = false;
                os << term_name(l);
            }
            os << "\"];\n";
            self(self, child.get());
        }
    };
    walk(walk, &root);
    os << "}\n";
    return os.str();
}

// CSV table of the Kac determinant factors.
inline std::string kac_factors_csv(const KacDeterminantResult& res) {
    std::ostringstream os;
    os << "r,s,exponent\n";
    for (const auto& f : res.factors) os << f.r << "," << f.s << "," << f.exponent << "\n";
    os << "ratio," << res.ratio.str() << "\n";
    return os.str();
}

} // namespace vff
