// Command-line front end: exact computations for torus mapping-class words,
// plumbing forms, Seifert scans, surgery certificates, layer traces, and the
// stored-claims verification run.
//
// Exit codes: 0 success (or all claims pass), 1 computation failure,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lowdim/claims.hpp"
#include "lowdim/embedded_claims.hpp"
#include "lowdim/json_io.hpp"
#include "lowdim/layers.hpp"
#include "lowdim/word_parse.hpp"

namespace {

using namespace lowdim;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string inertia_str(const Inertia& in) {
    std::ostringstream os;
    os << "(" << in.n_plus << "," << in.n_zero << "," << in.n_minus << ")";
    return os.str();
}

// ---- mcg ----

int run_mcg_eval(const std::string& text, bool as_json) {
    const TwistWord w = parse_word(text);
    const SL2 m = eval_word(w);
    const MonodromyClass cls = classify_monodromy(m);
    if (as_json) {
        Json j;
        j["word"] = w.to_string();
        j["matrix"] = sl2_to_json(m);
        j["trace"] = cls.trace.str();
        j["monodromy"] = to_string(cls.kind);
        j["order"] = cls.order ? std::to_string(*cls.order) : "infinite";
        j["identity"] = m.is_identity();
        emit(j);
    } else {
        std::cout << "word:      " << w.to_string() << "\n"
                  << "matrix:    " << m << "\n"
                  << "trace:     " << cls.trace << "\n"
                  << "monodromy: " << to_string(cls.kind) << ", order "
                  << (cls.order ? std::to_string(*cls.order) : "infinite") << "\n"
                  << "identity:  " << (m.is_identity() ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_mcg_slopes(const std::string& text, bool as_json) {
    const TwistWord w = parse_word(text).normalized();
    const auto slopes = layer_slopes(w);
    if (as_json) {
        Json j;
        j["word"] = w.to_string();
        Json arr = Json::array();
        for (const Slope& s : slopes) arr.push_back(s.to_string());
        j["slopes"] = std::move(arr);
        emit(j);
    } else {
        std::cout << "word:   " << w.to_string() << "\nslopes:";
        for (const Slope& s : slopes) std::cout << " " << s;
        std::cout << "\n";
    }
    return 0;
}

// ---- plumbing ----

PlumbingGraph load_graph(const std::string& path) {
    return graph_from_json(load_json_file(path));
}

int run_plumbing_analyze(const std::string& path, bool as_json) {
    const PlumbingGraph g = load_graph(path);
    const IntMatrix m = intersection_matrix(g);
    const Int det = det_exact(m);
    const Inertia in = inertia(m);
    const AbelianGroup h1 = cokernel_invariants(m);
    const std::size_t bad = bad_vertex_count(g);
    if (as_json) {
        Json j;
        j["vertices"] = std::to_string(g.vertex_count());
        j["edges"] = std::to_string(g.edges.size());
        j["det"] = det.str();
        j["inertia"] = inertia_to_json(in);
        j["b2_plus"] = std::to_string(in.n_plus);
        j["boundary_h1"] = group_to_json(h1);
        j["bad_vertices"] = std::to_string(bad);
        j["intersection_matrix"] = matrix_to_json(m);
        emit(j);
    } else {
        std::cout << "vertices:     " << g.vertex_count() << ", edges " << g.edges.size()
                  << "\n"
                  << "det:          " << det << "\n"
                  << "inertia:      " << inertia_str(in) << "  (b2+ = " << in.n_plus
                  << ")\n"
                  << "boundary H1:  " << h1 << "\n"
                  << "bad vertices: " << bad << "\n";
    }
    return 0;
}

int run_plumbing_catalog(const std::string& name, const std::vector<long long>& params,
                         bool as_json) {
    std::vector<Int> ps(params.begin(), params.end());
    const PlumbingGraph g = catalog(catalog_id_from_string(name, ps));
    if (as_json) {
        emit(graph_to_json(g));
    } else {
        std::cout << "vertices:";
        for (const Int& w : g.weights) std::cout << " " << w;
        std::cout << "\nedges:";
        for (const auto& [i, j] : g.edges) std::cout << " (" << i << "," << j << ")";
        std::cout << "\n";
        if (g.arrow) std::cout << "arrow: " << *g.arrow << "\n";
    }
    return 0;
}

// ---- seifert ----

struct TupleVerdict {
    long long t = 0;
    std::vector<long long> xi;
    Int xi0;
    ScanWindow window{};
    SignChangeReport report{};
    bool unique_min = false;
};

int run_seifert_check(const std::string& path, std::optional<long long> t_flag,
                      std::vector<long long> xi_flag, std::optional<long long> xi0_flag,
                      std::optional<long long> window_flag, bool as_json, bool parallel) {
    const SeifertData data = seifert_from_json(load_json_file(path));
    const bool applicable = data.a > 2 * data.genus;

    Int qs = 0;
    for (const auto& f : data.fibers) qs += f.q;
    const Int w_base = window_flag ? Int(*window_flag) : qs + data.genus + 1;
    const Int xi0 = xi0_flag ? Int(*xi0_flag) : default_xi0(data, w_base);

    // enumerate requested (t, xi) tuples
    std::vector<DeltaParams> tuples;
    std::vector<long long> ts;
    if (t_flag)
        ts.push_back(*t_flag);
    else
        for (long long t = -data.genus; t <= data.genus; ++t) ts.push_back(t);
    if (!xi_flag.empty() && xi_flag.size() != data.fibers.size())
        throw std::runtime_error("--xi needs one value per fiber");
    for (long long t : ts) {
        if (!xi_flag.empty()) {
            tuples.push_back(DeltaParams{t, xi0, xi_flag});
            continue;
        }
        std::vector<long long> xi(data.fibers.size(), 0);
        for (;;) {
            tuples.push_back(DeltaParams{t, xi0, xi});
            std::size_t i = 0;
            while (i < xi.size() && ++xi[i] == data.fibers[i].q) xi[i++] = 0;
            if (i == xi.size()) break;
        }
    }

    const bool lambda_zero = euler_slope(data) == 0;
    std::vector<TupleVerdict> verdicts(tuples.size());
    auto scan_one = [&](std::size_t i) {
        TupleVerdict v;
        v.t = tuples[i].t;
        v.xi = tuples[i].xi;
        v.xi0 = tuples[i].xi0;
        if (window_flag) {
            v.window = ScanWindow{-*window_flag, *window_flag};
        } else if (!lambda_zero) {
            v.window = certain_window(data, tuples[i]);
        } else {
            v.window = ScanWindow{-10, 10};  // fallback scan; tails stay uncertified
        }
        v.report = sign_change_count(data, tuples[i], v.window);
        v.unique_min = lambda_zero ? false : unique_local_min(data, tuples[i]);
        verdicts[i] = std::move(v);
    };
    if (parallel) {
        std::vector<std::future<void>> futs;
        for (std::size_t i = 0; i < tuples.size(); ++i)
            futs.push_back(std::async(std::launch::async, scan_one, i));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < tuples.size(); ++i) scan_one(i);
    }

    bool all_ok = !verdicts.empty();
    for (const auto& v : verdicts)
        all_ok = all_ok && v.report.changes == 1 && v.report.tail_certain && v.unique_min;

    const std::string verdict = !applicable ? "criterion not applicable (a <= 2g)"
                                : all_ok    ? "all scans certified a single sign change"
                                            : "some scan failed";
    if (as_json) {
        Json j;
        j["data"] = seifert_to_json(data);
        std::ostringstream slope_os;
        slope_os << euler_slope(data);
        j["euler_slope"] = slope_os.str();
        j["criterion_applies"] = applicable;
        Json arr = Json::array();
        for (const auto& v : verdicts) {
            Json e;
            e["t"] = std::to_string(v.t);
            Json xi = Json::array();
            for (long long x : v.xi) xi.push_back(std::to_string(x));
            e["xi"] = std::move(xi);
            e["xi0"] = v.xi0.str();
            e["window"] = Json::array(
                {std::to_string(v.window.lo), std::to_string(v.window.hi)});
            e["sign_changes"] = std::to_string(v.report.changes);
            e["tail_certain"] = v.report.tail_certain;
            e["lambda_zero"] = v.report.lambda_zero;
            e["unique_local_min"] = v.unique_min;
            arr.push_back(std::move(e));
        }
        j["scans"] = std::move(arr);
        j["verdict"] = verdict;
        emit(j);
    } else {
        std::cout << "seifert data: genus " << data.genus << ", a " << data.a
                  << ", fibers";
        if (data.fibers.empty()) std::cout << " none";
        for (const auto& f : data.fibers) std::cout << " " << f.r << "/" << f.q;
        std::cout << "\neuler slope:  " << euler_slope(data) << "\n";
        for (const auto& v : verdicts) {
            std::cout << "t=" << v.t << " xi=(";
            for (std::size_t k = 0; k < v.xi.size(); ++k)
                std::cout << (k ? "," : "") << v.xi[k];
            std::cout << ") xi0=" << v.xi0 << " window=[" << v.window.lo << ","
                      << v.window.hi << "] changes=" << v.report.changes
                      << (v.report.tail_certain ? " tails=certain" : " tails=uncertain")
                      << " unique-min=" << (v.unique_min ? "yes" : "no") << "\n";
        }
        std::cout << "verdict: " << verdict << "\n";
    }
    return 0;
}

// ---- cobordism ----

int run_cobordism_certify(const std::string& text, bool relaxed, bool as_json) {
    const GammaCertificate cert = b2plus_certificate(parse_word(text), relaxed);
    if (as_json) {
        emit(certificate_to_json(cert));
    } else {
        if (!cert.found) {
            std::cout << "no certificate: the word contains no matching block\n";
            return 0;
        }
        std::cout << "certificate found\n"
                  << "  normalization: rotation " << cert.rotation
                  << (cert.swapped ? ", swapped" : "") << "\n"
                  << "  factor block:  [" << cert.begin << ", " << cert.end << ") of "
                  << cert.scanned.to_string() << "\n"
                  << "  canonical:     " << (cert.canonical ? "yes" : "no")
                  << (cert.relaxed_match ? " (relaxed template)" : "") << "\n"
                  << "  det:           " << cert.det << "\n"
                  << "  inertia:       " << inertia_str(cert.form) << "  (b2+ = "
                  << cert.form.n_plus << ")\n";
    }
    return 0;
}

// ---- layers ----

int run_layers_trace(long long n, bool as_json) {
    const TorsionTrace tr = reduce_torsion_script(n);
    if (as_json) {
        emit(trace_to_json(tr));
        return 0;
    }
    std::cout << "torsion-reduction trace, n = " << n << "\n";
    std::cout << "layers:";
    for (const auto& l : tr.initial.layers)
        std::cout << " " << l.name << "(" << l.left << "," << l.right << ")";
    std::cout << "\n\nstep  surgery      interface       slopes\n";
    int step = 0;
    for (const auto& s : tr.steps) {
        if (!s.surgery.empty()) {
            ++step;
            std::cout << "  " << step << (step < 10 ? "   " : "  ") << s.surgery;
            for (std::size_t pad = s.surgery.size(); pad < 13; ++pad) std::cout << " ";
            if (s.interface_index)
                std::cout << *s.interface_index << " (slope " << s.curve << ")";
            else
                std::cout << "outer boundary";
            std::cout << "\n";
        } else {
            std::cout << "      -> " << s.snapshot_label << ": ("
                      << s.snapshot->first << ", " << s.snapshot->second << ")";
            if (!s.note.empty()) std::cout << "   [" << s.note << "]";
            std::cout << "\n";
        }
    }
    std::cout << "\nregluing word:   " << tr.total_word.to_string() << "\n"
              << "regluing matrix: " << tr.total_matrix << "\n"
              << "identity:        " << (tr.regluing_identity ? "yes" : "no") << "\n";
    return 0;
}

// ---- verify-paper ----

int run_verify_paper(bool as_json, bool parallel) {
    const Json doc = Json::parse(embedded_claims_json());
    const auto results = run_claims(doc, parallel);
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    if (as_json) {
        emit(claims_report(results));
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.provenance << "] "
                      << r.id << ": " << r.description << "\n";
            if (!r.pass)
                std::cout << "      expected " << r.expected.dump() << ", computed "
                          << r.computed.dump() << "\n";
        }
        std::cout << results.size() - failed << "/" << results.size()
                  << " claims verified\n";
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for torus mapping-class words, plumbing forms, "
                 "Seifert scans and contact layer traces"};
    app.require_subcommand(1);

    // mcg
    auto* mcg = app.add_subcommand("mcg", "torus mapping class group word calculus");
    mcg->require_subcommand(1);
    std::string mcg_word;
    bool mcg_json = false;
    auto* mcg_eval = mcg->add_subcommand("eval", "evaluate a twist word to SL(2,Z)");
    mcg_eval->add_option("word", mcg_word, "word in a, b, e.g. \"(a^3 b)^3\"")->required();
    mcg_eval->add_flag("--json", mcg_json, "machine-readable output");
    std::string slopes_word;
    bool slopes_json = false;
    auto* mcg_slopes = mcg->add_subcommand("slopes", "layer slopes of a word");
    mcg_slopes->add_option("word", slopes_word, "word in a, b")->required();
    mcg_slopes->add_flag("--json", slopes_json, "machine-readable output");

    // plumbing
    auto* plumbing = app.add_subcommand("plumbing", "plumbing graph analysis");
    plumbing->require_subcommand(1);
    std::string plumbing_file;
    bool plumbing_json = false;
    auto* analyze = plumbing->add_subcommand(
        "analyze", "det, inertia, boundary homology, bad vertices of a graph file");
    analyze->add_option("file", plumbing_file, "graph JSON file")->required();
    analyze->add_flag("--json", plumbing_json, "machine-readable output");
    std::string catalog_name;
    std::vector<long long> catalog_params;
    bool catalog_json = false;
    auto* cat = plumbing->add_subcommand("catalog", "emit a built-in graph");
    cat->add_option("name", catalog_name,
                    "one of: e6tilde e7tilde e8tilde seif-parabolic plum villa-a "
                    "villa-b chain d-type lens-chain")
        ->required();
    cat->add_option("params", catalog_params, "integer parameters");
    cat->add_flag("--json", catalog_json, "machine-readable output");

    // seifert
    auto* seifert = app.add_subcommand("seifert", "Seifert fibered space scans");
    seifert->require_subcommand(1);
    std::string seifert_file;
    std::optional<long long> t_flag, xi0_flag, window_flag;
    std::vector<long long> xi_flag;
    bool seifert_json = false, seifert_parallel = false;
    auto* check = seifert->add_subcommand(
        "lspace-check", "single-sign-change scans over (t, xi) tuples");
    check->add_option("file", seifert_file, "seifert JSON file")->required();
    check->add_option("--t", t_flag, "restrict to one t value");
    check->add_option("--xi", xi_flag, "one xi value per fiber");
    check->add_option("--xi0", xi0_flag, "override the automatic xi0");
    check->add_option("--window", window_flag, "scan window half-width");
    check->add_flag("--json", seifert_json, "machine-readable output");
    check->add_flag("--parallel", seifert_parallel, "scan tuples in parallel");

    // cobordism
    auto* cobordism = app.add_subcommand("cobordism", "surgery-word certificates");
    cobordism->require_subcommand(1);
    std::string certify_word;
    bool relaxed = false, certify_json = false;
    auto* certify = cobordism->add_subcommand(
        "certify", "search a positive word for the b_2^+ block");
    certify->add_option("word", certify_word, "positive word in a, b")->required();
    certify->add_flag("--relaxed-pattern", relaxed,
                      "also accept the four-x-group relaxed block");
    certify->add_flag("--json", certify_json, "machine-readable output");

    // layers
    auto* layers = app.add_subcommand("layers", "toric layer decompositions");
    layers->require_subcommand(1);
    long long trace_n = 1;
    bool trace_json = false;
    auto* trace = layers->add_subcommand("trace", "torsion-reduction slope trace");
    trace->add_option("--n", trace_n, "torsion of the starting layer")->required();
    trace->add_flag("--json", trace_json, "machine-readable output");

    // verify-paper
    bool verify_json = false, verify_parallel = false;
    auto* verify = app.add_subcommand("verify-paper",
                                      "re-derive every stored claim and compare");
    verify->add_flag("--json", verify_json, "machine-readable output");
    verify->add_flag("--parallel", verify_parallel, "run claims in parallel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mcg_eval->parsed()) return run_mcg_eval(mcg_word, mcg_json);
        if (mcg_slopes->parsed()) return run_mcg_slopes(slopes_word, slopes_json);
        if (analyze->parsed()) return run_plumbing_analyze(plumbing_file, plumbing_json);
        if (cat->parsed())
            return run_plumbing_catalog(catalog_name, catalog_params, catalog_json);
        if (check->parsed())
            return run_seifert_check(seifert_file, t_flag, xi_flag, xi0_flag,
                                     window_flag, seifert_json, seifert_parallel);
        if (certify->parsed())
            return run_cobordism_certify(certify_word, relaxed, certify_json);
        if (trace->parsed()) return run_layers_trace(trace_n, trace_json);
        if (verify->parsed()) return run_verify_paper(verify_json, verify_parallel);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
