#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lowdim/cobordism.hpp"
#include "lowdim/layers.hpp"
#include "lowdim/linalg.hpp"
#include "lowdim/mcg.hpp"
#include "lowdim/plumbing.hpp"
#include "lowdim/seifert.hpp"

namespace lowdim {

// Insertion-ordered JSON so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// Every integer is emitted as a decimal string: consumers must not be forced
// to truncate big values to 64 bits. Inputs accept numbers or strings.
inline Json int_to_json(const Int& v) { return v.str(); }

inline Int int_from_json(const Json& j, const std::string& what) {
    try {
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw std::runtime_error("expected integer for " + what + ", got " + j.dump());
}

inline long long ll_from_json(const Json& j, const std::string& what) {
    const Int v = int_from_json(j, what);
    if (v > (Int(1) << 62) || v < -(Int(1) << 62))
        throw std::runtime_error(what + " out of range");
    return v.convert_to<long long>();
}

inline std::size_t index_from_json(const Json& j, const std::string& what) {
    const long long v = ll_from_json(j, what);
    if (v < 0) throw std::runtime_error(what + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

// Slope: "inf", an integer (value y with x = 1), or a primitive pair [x, y].
inline Json slope_to_json(const Slope& s) {
    if (s.is_infinity()) return "inf";
    if (s.x == 1) return s.y.str();
    return Json::array({s.x.str(), s.y.str()});
}

inline Slope slope_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return Slope::infinity();
    if (j.is_array()) {
        if (j.size() != 2) throw std::runtime_error("slope pair must have two entries");
        return Slope(int_from_json(j[0], "slope x"), int_from_json(j[1], "slope y"));
    }
    return Slope::of_integer(int_from_json(j, "slope"));
}

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::runtime_error("matrix must be a nonempty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::runtime_error("matrix rows must have equal length");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = int_from_json(j[i][k], "matrix entry");
    }
    return m;
}

inline Json sl2_to_json(const SL2& m) {
    return Json::array({Json::array({m.a.str(), m.b.str()}),
                        Json::array({m.c.str(), m.d.str()})});
}

inline Json inertia_to_json(const Inertia& in) {
    Json j;
    j["n_plus"] = std::to_string(in.n_plus);
    j["n_zero"] = std::to_string(in.n_zero);
    j["n_minus"] = std::to_string(in.n_minus);
    return j;
}

inline Json group_to_json(const AbelianGroup& g) {
    Json j;
    j["free_rank"] = std::to_string(g.free_rank);
    Json t = Json::array();
    for (const Int& d : g.torsion) t.push_back(d.str());
    j["torsion"] = std::move(t);
    j["pretty"] = g.to_string();
    return j;
}

inline Json word_to_json(const TwistWord& w) {
    Json j = Json::array();
    for (const auto& f : w.factors()) {
        Json fac;
        fac["slope"] = slope_to_json(f.slope);
        fac["exp"] = std::to_string(f.exponent);
        j.push_back(std::move(fac));
    }
    return j;
}

inline TwistWord word_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("word must be an array of factors");
    std::vector<WordFactor> fs;
    for (const auto& fac : j) {
        if (!fac.contains("slope") || !fac.contains("exp"))
            throw std::runtime_error("word factor needs 'slope' and 'exp'");
        fs.push_back(WordFactor{slope_from_json(fac["slope"]),
                                ll_from_json(fac["exp"], "exponent")});
    }
    return TwistWord(std::move(fs));
}

inline Json graph_to_json(const PlumbingGraph& g) {
    Json j;
    Json vs = Json::array();
    for (const Int& w : g.weights) {
        Json v;
        v["weight"] = w.str();
        vs.push_back(std::move(v));
    }
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const auto& [a, b] : g.edges)
        es.push_back(Json::array({std::to_string(a), std::to_string(b)}));
    j["edges"] = std::move(es);
    if (g.arrow) j["arrow"] = std::to_string(*g.arrow);
    return j;
}

inline PlumbingGraph graph_from_json(const Json& j) {
    PlumbingGraph g;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::runtime_error("graph needs a 'vertices' array");
    for (const auto& v : j["vertices"]) {
        if (v.is_object() && v.contains("weight"))
            g.weights.push_back(int_from_json(v["weight"], "vertex weight"));
        else
            g.weights.push_back(int_from_json(v, "vertex weight"));
    }
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error("edge must be a pair of vertex indices");
            g.edges.emplace_back(index_from_json(e[0], "edge endpoint"),
                                 index_from_json(e[1], "edge endpoint"));
        }
    if (j.contains("arrow") && !j["arrow"].is_null())
        g.arrow = index_from_json(j["arrow"], "arrow");
    g.validate();
    return g;
}

inline Json seifert_to_json(const SeifertData& d) {
    Json j;
    j["genus"] = std::to_string(d.genus);
    j["a"] = std::to_string(d.a);
    Json fs = Json::array();
    for (const auto& f : d.fibers)
        fs.push_back(Json::array({std::to_string(f.r), std::to_string(f.q)}));
    j["fibers"] = std::move(fs);
    return j;
}

inline SeifertData seifert_from_json(const Json& j) {
    SeifertData d;
    if (!j.contains("genus") || !j.contains("a"))
        throw std::runtime_error("seifert data needs 'genus' and 'a'");
    d.genus = ll_from_json(j["genus"], "genus");
    d.a = ll_from_json(j["a"], "a");
    if (j.contains("fibers"))
        for (const auto& f : j["fibers"]) {
            if (!f.is_array() || f.size() != 2)
                throw std::runtime_error("fiber must be a pair [r, q]");
            d.fibers.push_back(SeifertFiber{ll_from_json(f[0], "fiber r"),
                                            ll_from_json(f[1], "fiber q")});
        }
    d.validate();
    return d;
}

inline Json certificate_to_json(const GammaCertificate& c) {
    Json j;
    j["found"] = c.found;
    if (!c.found) return j;
    Json norm;
    norm["rotation"] = std::to_string(c.rotation);
    norm["swapped"] = c.swapped;
    norm["conjugator"] = word_to_json(c.conjugator);
    j["normalization"] = std::move(norm);
    j["positions"] = Json::array({std::to_string(c.begin), std::to_string(c.end)});
    j["scanned_word"] = c.scanned.to_string();
    j["canonical"] = c.canonical;
    j["relaxed_match"] = c.relaxed_match;
    j["det"] = c.det.str();
    j["inertia"] = inertia_to_json(c.form);
    j["plumbing"] = graph_to_json(c.plumbing);
    if (c.script) {
        Json s;
        s["start"] = matrix_to_json(c.script->start);
        Json slides = Json::array();
        for (const auto& sl : c.script->slides)
            slides.push_back(Json::array(
                {std::to_string(sl.i), std::to_string(sl.j), sl.c.str()}));
        s["slides"] = std::move(slides);
        Json blk = Json::array();
        for (std::size_t b : c.script->block) blk.push_back(std::to_string(b));
        s["block"] = std::move(blk);
        j["slide_script"] = std::move(s);
    }
    return j;
}

inline Json decomposition_to_json(const LayerDecomposition& d) {
    Json j;
    Json ls = Json::array();
    for (const auto& l : d.layers) {
        Json e;
        e["name"] = l.name;
        e["left"] = l.left.to_string();
        e["right"] = l.right.to_string();
        ls.push_back(std::move(e));
    }
    j["layers"] = std::move(ls);
    Json gs = Json::array();
    for (const auto& g : d.gluings) gs.push_back(sl2_to_json(g));
    j["gluings"] = std::move(gs);
    return j;
}

inline Json trace_to_json(const TorsionTrace& tr) {
    Json j;
    j["n"] = std::to_string(tr.n);
    j["initial"] = decomposition_to_json(tr.initial);
    Json steps = Json::array();
    for (const auto& s : tr.steps) {
        Json e;
        if (!s.surgery.empty()) {
            e["surgery"] = s.surgery;
            e["curve"] = s.curve.to_string();
            if (s.interface_index)
                e["interface"] = std::to_string(*s.interface_index);
            else
                e["interface"] = "outer boundary";
        }
        if (s.snapshot) {
            e["label"] = s.snapshot_label;
            e["slopes"] = Json::array(
                {s.snapshot->first.to_string(), s.snapshot->second.to_string()});
        }
        if (!s.note.empty()) e["note"] = s.note;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["final"] = decomposition_to_json(tr.final_state);
    j["regluing_word"] = tr.total_word.to_string();
    j["regluing_matrix"] = sl2_to_json(tr.total_matrix);
    j["regluing_is_identity"] = tr.regluing_identity;
    return j;
}

}  // namespace lowdim
