// io.hpp -- human-readable labels for window complexes, DOT / JSON / text
// export of silting posets and (co)torsion data.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "torsion.hpp"

namespace dsilt {

// Label of an indecomposable window complex: stalks print as "S^m Pv"
// (suspension power omitted when zero), longer complexes as
// "S^m (Pa->Pb->...)" read in increasing degree, with the top degree at 0
// absorbed into the suspension power.  Vertices print 1-based.
inline std::string indec_label(const ProjComplex& x) {
    if (x.is_zero_complex()) return "0";
    int m = -x.hi;
    std::ostringstream os;
    if (m > 0) os << "S" << (m > 1 ? "^" + std::to_string(m) : "") << " ";
    bool multi = x.lo < x.hi;
    if (multi) os << "(";
    for (int k = x.lo; k <= x.hi; ++k) {
        if (k > x.lo) os << "->";
        const std::vector<int>& s = x.summands(k);
        if (s.size() != 1) os << "[";
        for (size_t i = 0; i < s.size(); ++i) os << (i ? "+" : "") << "P" << (s[i] + 1);
        if (s.size() != 1) os << "]";
    }
    if (multi) os << ")";
    return os.str();
}

inline std::string silt_label(const IndecRegistry& reg, const SiltObj& m) {
    std::string out;
    for (size_t i = 0; i < m.ids.size(); ++i) {
        if (i) out += " + ";
        out += indec_label(reg.objs[m.ids[i]]);
    }
    return out;
}

inline std::string mask_label(const Pool& pl, Mask m) {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < pl.size(); ++p)
        if ((m >> p) & 1) {
            if (!first) out += ", ";
            out += indec_label(pl.obj(p));
            first = false;
        }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Silting poset export
// ---------------------------------------------------------------------------

inline std::string silting_dot(const SiltingPoset& ps) {
    std::ostringstream os;
    os << "digraph silting {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < ps.elems.size(); ++i)
        os << "  n" << i << " [label=\"" << silt_label(*ps.reg, ps.elems[i]) << "\"];\n";
    // edges lower -> upper so the maximum Lambda is drawn on top
    for (auto [l, u] : ps.hasse) os << "  n" << l << " -> n" << u << ";\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::json silting_json(const SiltingPoset& ps) {
    nlohmann::json j;
    j["d"] = ps.d;
    j["count"] = ps.elems.size();
    j["max"] = ps.max_idx;
    j["min"] = ps.min_idx;
    j["nodes"] = nlohmann::json::array();
    for (size_t i = 0; i < ps.elems.size(); ++i) {
        nlohmann::json n;
        n["id"] = i;
        n["label"] = silt_label(*ps.reg, ps.elems[i]);
        n["summands"] = nlohmann::json::array();
        for (int id : ps.elems[i].ids) {
            nlohmann::json s;
            s["registry_id"] = id;
            s["label"] = indec_label(ps.reg->objs[id]);
            s["signature"] = ps.reg->objs[id].signature();
            n["summands"].push_back(s);
        }
        j["nodes"].push_back(n);
    }
    j["hasse"] = nlohmann::json::array();
    for (auto [l, u] : ps.hasse) j["hasse"].push_back({l, u});
    return j;
}

inline std::string silting_text(const SiltingPoset& ps) {
    std::ostringstream os;
    os << ps.elems.size() << " silting objects (d=" << ps.d << ")\n";
    for (size_t i = 0; i < ps.elems.size(); ++i) {
        os << "  [" << i << "]" << (i == (size_t)ps.max_idx ? " (max)" : "")
           << (i == (size_t)ps.min_idx ? " (min)" : "") << " "
           << silt_label(*ps.reg, ps.elems[i]) << "\n";
    }
    os << ps.hasse.size() << " Hasse covers (lower -> upper):\n";
    for (auto [l, u] : ps.hasse) os << "  " << l << " -> " << u << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Torsion pair export
// ---------------------------------------------------------------------------

inline nlohmann::json tors_json(const Pool& pl, const std::vector<TorsPair>& pairs,
                                bool classify) {
    nlohmann::json j;
    j["d"] = pl.d;
    j["pool"] = nlohmann::json::array();
    for (int p = 0; p < pl.size(); ++p) {
        nlohmann::json e;
        e["index"] = p;
        e["label"] = indec_label(pl.obj(p));
        e["shift_projective"] = (bool)pl.sp[p];
        j["pool"].push_back(e);
    }
    j["pairs"] = nlohmann::json::array();
    for (const TorsPair& t : pairs) {
        nlohmann::json e;
        e["T"] = mask_label(pl, t.T);
        e["F"] = mask_label(pl, t.F);
        e["T_mask"] = t.T;
        e["F_mask"] = t.F;
        if (classify) {
            TorsClassification cl = classify_torsion(pl, t);
            e["positive"] = cl.positive;
            e["s_torsion"] = cl.s_torsion;
            e["functorially_finite"] = cl.ff();
        }
        j["pairs"].push_back(e);
    }
    return j;
}

inline std::string tors_text(const Pool& pl, const std::vector<TorsPair>& pairs,
                             bool classify) {
    std::ostringstream os;
    os << "pool (" << pl.size() << " window indecomposables, "
       << popcount(pl.d_mask) << " in the target category):\n";
    for (int p = 0; p < pl.size(); ++p)
        os << "  [" << p << "]" << (pl.sp[p] ? "*" : " ") << " "
           << indec_label(pl.obj(p)) << "\n";
    os << pairs.size() << " torsion pairs:\n";
    for (size_t i = 0; i < pairs.size(); ++i) {
        os << "  (" << i << ") T=" << mask_label(pl, pairs[i].T)
           << " F=" << mask_label(pl, pairs[i].F);
        if (classify) {
            TorsClassification cl = classify_torsion(pl, pairs[i]);
            os << (cl.positive ? " positive" : "") << (cl.s_torsion ? " s-torsion" : "")
               << (cl.ff() ? " ff" : "");
        }
        os << "\n";
    }
    return os.str();
}

// Hasse diagram of the torsion-class inclusion order.
inline std::string tors_dot(const Pool& pl, const std::vector<TorsPair>& pairs) {
    int n = (int)pairs.size();
    std::ostringstream os;
    os << "digraph torsion {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < n; ++i)
        os << "  n" << i << " [label=\"" << mask_label(pl, pairs[i].T) << "\"];\n";
    auto leq = [&](int i, int j) { return (pairs[i].T & ~pairs[j].T) == 0; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
            if (cover) os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Spec files
// ---------------------------------------------------------------------------

inline AlgebraSpec load_algebra_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file " + path);
    return parse_algebra_spec(in);
}

}  // namespace dsilt
