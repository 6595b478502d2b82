// Acceptance suite: runs each top-level criterion exactly and prints one
// PASS/FAIL line per criterion. Exit code 0 iff everything passes. All
// checks are exact integer/rational comparisons; randomized suites use
// fixed seeds and at least 1000 cases each.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "lowdim/claims.hpp"
#include "lowdim/json_io.hpp"
#include "lowdim/layers.hpp"
#include "lowdim/word_parse.hpp"
#include "../oracles.hpp"

using namespace lowdim;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, const std::string& what, std::string& why) {
    if (!ok && why.empty()) why = what;
    return ok;
}

// 1. relation suite, exact matrix equality
bool criterion_relations(std::string& why) {
    bool ok = true;
    ok &= expect(eval_word(parse_word("aba")) == eval_word(parse_word("bab")),
                 "aba != bab", why);
    ok &= expect(is_identity_word(parse_word("(ab)^6")), "(ab)^6 != 1", why);
    ok &= expect(is_identity_word(parse_word("(a^3 b)^3")), "(a^3b)^3 != 1", why);
    ok &= expect(is_identity_word(parse_word("(b^3 a)^3")), "(b^3a)^3 != 1", why);
    return ok;
}

// 2. the ten-factor word, its conjugates, and their layer slopes
bool criterion_words(std::string& why) {
    const TwistWord w = parse_word("a^4 b a^3 b a^3 b^4 a b^3 a b^3");
    bool ok = expect(is_identity_word(w), "ten-factor word != 1", why);
    for (long long n = 1; n <= 5; ++n) {
        const TwistWord c = conjugate_word(w, TwistWord::b(n));
        ok &= expect(is_identity_word(c), "conjugated word != 1", why);
        std::vector<Slope> want;
        for (int i = 0; i < 5; ++i) {
            want.push_back(Slope(1, -n));
            want.push_back(Slope::infinity());
        }
        ok &= expect(layer_slopes(c) == want, "slope sequence mismatch", why);
    }
    return ok;
}

// 3. the certificate plumbing form
bool criterion_plum(std::string& why) {
    const IntMatrix m = intersection_matrix(catalog({CatalogName::Plum, {}}));
    bool ok = expect(det_exact(m) == -3, "det != -3", why);
    const Inertia in = inertia(m);
    ok &= expect(in.n_plus >= 1, "no positive eigenvalue", why);
    ok &= expect(in == Inertia{1, 0, 7}, "inertia != (1,0,7)", why);
    ok &= expect(oracles::inertia_from_char_poly(m) == Inertia{1, 0, 7},
                 "char-poly oracle disagrees", why);
    return ok;
}

// 4. elliptic torus-bundle homology and lens substitutions
bool criterion_elliptic(std::string& why) {
    const std::pair<CatalogName, long long> cases[] = {
        {CatalogName::E6Tilde, 3}, {CatalogName::E7Tilde, 2}, {CatalogName::E8Tilde, 1}};
    bool ok = true;
    for (const auto& [name, order] : cases) {
        const PlumbingGraph g = catalog({name, {}});
        const AbelianGroup h1 = boundary_homology(g);
        ok &= expect(h1.free_rank == 1, "free rank != 1", why);
        const std::vector<Int> want =
            order > 1 ? std::vector<Int>{order} : std::vector<Int>{};
        ok &= expect(h1.torsion == want, "torsion mismatch", why);
        const PlumbingGraph lens = reweight_vertex(g, *g.arrow, -1);
        ok &= expect(abs_int(det_exact(intersection_matrix(lens))) == order,
                     "lens |det| mismatch", why);
    }
    return ok;
}

// 5. klein-bottle bundle plumbings by parity
bool criterion_klein(std::string& why) {
    bool ok = true;
    for (long long n = 1; n <= 6; ++n) {
        const AbelianGroup h1 =
            boundary_homology(catalog({CatalogName::VillaA, {Int(n)}}));
        const AbelianGroup want =
            n % 2 ? AbelianGroup{1, {4}} : AbelianGroup{1, {2, 2}};
        ok &= expect(h1 == want, "parity homology mismatch at n=" + std::to_string(n),
                     why);
    }
    ok &= expect(boundary_homology(catalog({CatalogName::VillaA, {0}})) ==
                     boundary_homology(catalog({CatalogName::SeifParabolic, {}})),
                 "n=0 homology != star homology", why);
    return ok;
}

// 6. randomized single-sign-change scans
bool criterion_seifert(std::string& why) {
    const LSpaceScanOutcome o = run_lspace_scan(0x5e1f5ca1eULL, 20);
    bool ok = expect(o.instances == 20, "instance count", why);
    ok &= expect(o.all_single_change, "a scan saw != 1 sign changes", why);
    ok &= expect(o.all_tail_certain, "a scan could not certify its tails", why);
    ok &= expect(o.all_verdicts_agree, "minimum verdict disagreed with scan", why);
    return ok;
}

// 7. pattern firing and the attached certificate
bool criterion_pattern(std::string& why) {
    const GammaCertificate on_word =
        b2plus_certificate(parse_word("a^4 b a^3 b a^3 b^4 a b^3 a b^3"));
    const GammaCertificate on_gamma =
        b2plus_certificate(parse_word("a^3 b a^3 b a^3 b^2"));
    bool ok = expect(on_word.found, "no match on the ten-factor word", why);
    ok &= expect(on_gamma.found && on_gamma.canonical, "no canonical self-match", why);
    ok &= expect(!gamma_pattern(parse_word("a^3 b a^3 b")).found,
                 "false positive on a^3 b a^3 b", why);
    ok &= expect(on_word.det == -3 && on_word.form.n_plus == 1,
                 "certificate data mismatch", why);
    ok &= expect(intersection_matrix(on_word.plumbing) ==
                     intersection_matrix(catalog({CatalogName::Plum, {}})),
                 "certificate plumbing mismatch", why);
    ok &= expect(on_gamma.script.has_value(), "canonical match lacks slide script", why);
    if (on_gamma.script) {
        const IntMatrix end = on_gamma.script->replay();
        ok &= expect(end.principal_submatrix(on_gamma.script->block) ==
                         intersection_matrix(catalog({CatalogName::Plum, {}})),
                     "slide script does not expose the plumbing block", why);
        ok &= expect(inertia(end) == inertia(on_gamma.script->start),
                     "slides changed the inertia", why);
    }
    return ok;
}

// 8. the torsion-reduction slope trace
bool criterion_trace(std::string& why) {
    const TorsionTrace tr = reduce_torsion_script(1);
    const std::vector<std::pair<Slope, Slope>> want = {
        {Slope::zero(), Slope(1, -1)}, {Slope::zero(), Slope::zero()},
        {Slope::zero(), Slope(1, 1)},  {Slope::zero(), Slope(1, 2)},
        {Slope::infinity(), Slope(1, 2)}, {Slope::zero(), Slope(1, -2)}};
    bool ok = expect(tr.snapshots() == want, "slope trace mismatch", why);
    ok &= expect(tr.regluing_identity, "accumulated regluing != 1", why);
    ok &= expect(regluing_matrix(reduce_torsion_config()).is_identity(),
                 "ordered-composition regluing != 1", why);
    return ok;
}

// 9. the basic-slice slope step
bool criterion_basic_slice(std::string& why) {
    const SL2 d_inv(1, -1, 0, 1);
    bool ok = true;
    for (long long n = 1; n <= 10; ++n)
        ok &= expect(act_on_slope(d_inv, Slope(n, -1)) == Slope(n + 1, -1),
                     "slope step failed at n=" + std::to_string(n), why);
    return ok;
}

// 10a. Smith correctness, 1000 random matrices
bool property_snf(std::string& why) {
    std::mt19937_64 rng(1001);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        const IntMatrix m = oracles::rand_matrix(rng, rows, cols, 9);
        const SNFResult snf = smith_normal_form(m);
        if (!(snf.u * m * snf.v == snf.d)) return expect(false, "U M V != D", why);
        if (abs_int(det_exact(snf.u)) != 1 || abs_int(det_exact(snf.v)) != 1)
            return expect(false, "U or V not unimodular", why);
        const std::size_t steps = std::min(rows, cols);
        for (std::size_t k = 0; k < steps; ++k) {
            if (snf.d.at(k, k) < 0) return expect(false, "negative diagonal", why);
            if (k + 1 < steps && snf.d.at(k, k) != 0 &&
                snf.d.at(k + 1, k + 1) % snf.d.at(k, k) != 0)
                return expect(false, "divisibility chain broken", why);
        }
    }
    return true;
}

// 10b. inertia invariance under congruence slides, 1000 cases
bool property_inertia(std::string& why) {
    std::mt19937_64 rng(1002);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + rng() % 5;
        const IntMatrix m = oracles::rand_symmetric(rng, n, 7);
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) b = (b + 1) % n;
        const IntMatrix slid = congruence_slide(m, a, b, oracles::rand_int(rng, -4, 4));
        if (!(inertia(slid) == inertia(m)))
            return expect(false, "inertia changed under a slide", why);
    }
    return true;
}

// 10c. twist conjugation law, 1000 cases
bool property_conjugation(std::string& why) {
    std::mt19937_64 rng(1003);
    for (int i = 0; i < 1000; ++i) {
        const SL2 m = oracles::rand_sl2(rng);
        const Slope c = oracles::rand_slope(rng);
        if (!(twist_matrix(act_on_slope(m, c)) == m * twist_matrix(c) * m.inverse()))
            return expect(false, "conjugation law failed", why);
    }
    return true;
}

// 10d. h telescoping, 1000 cases
bool property_telescoping(std::string& why) {
    std::mt19937_64 rng(1004);
    for (int i = 0; i < 1000; ++i) {
        const SeifertData d = oracles::rand_seifert(rng);
        const DeltaParams p = oracles::rand_delta_params(rng, d);
        const long long s = oracles::rand_int(rng, -12, 12).convert_to<long long>();
        if (h_t(d, p, s + 1) - h_t(d, p, s) != delta_t(d, p, s))
            return expect(false, "telescoping identity failed", why);
    }
    return true;
}

// 10e. normalize idempotence and outer-slope invariance, 1000 cases
bool property_normalize(std::string& why) {
    std::mt19937_64 rng(1005);
    for (int i = 0; i < 1000; ++i) {
        const LayerDecomposition d = oracles::rand_decomposition(rng);
        const LayerDecomposition n = normalize(d);
        if (!(outer_slopes(n) == outer_slopes(d)))
            return expect(false, "outer slopes changed under normalize", why);
        if (!(normalize(n) == n)) return expect(false, "normalize not idempotent", why);
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 relation suite (aba=bab, (ab)^6, (a^3b)^3, (b^3a)^3)", criterion_relations},
        {"2 identity words and their layer slopes", criterion_words},
        {"3 certificate plumbing: det -3, inertia (1,0,7)", criterion_plum},
        {"4 elliptic bundles: H_1 = Z + Z/(9-i), lens |det| = 9-i", criterion_elliptic},
        {"5 klein-bottle bundles: H_1 by parity; n=0 matches the star", criterion_klein},
        {"6 seifert scans: 20 random instances, one certified sign change",
         criterion_seifert},
        {"7 pattern fires and attaches the b_2^+ certificate", criterion_pattern},
        {"8 torsion-reduction trace and trivial total regluing", criterion_trace},
        {"9 basic-slice slope steps (n,-1) -> (n+1,-1)", criterion_basic_slice},
        {"10a property: Smith form U M V = D with chain (1000 cases)", property_snf},
        {"10b property: inertia invariant under slides (1000 cases)", property_inertia},
        {"10c property: twist conjugation law (1000 cases)", property_conjugation},
        {"10d property: h telescoping (1000 cases)", property_telescoping},
        {"10e property: normalize idempotent, outer slopes invariant (1000 cases)",
         property_normalize},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name;
        if (!ok && !why.empty()) std::cout << "  [" << why << "]";
        std::cout << "\n";
        failures += !ok;
    }
    std::cout << (failures ? "ACCEPTANCE: FAILED (" + std::to_string(failures) + ")"
                           : "ACCEPTANCE: OK")
              << "\n";
    return failures ? 1 : 0;
}
