#include "amp2/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <thread>

namespace amp2 {

AmpPoint apply_Z(const RationalMatrix& Z, const RationalMatrix& A) {
    if (Z.cols() != A.rows()) throw std::invalid_argument("Z and A shapes do not match");
    if (Z.rows() != A.cols() + 2) throw std::invalid_argument("Z must have k+2 rows");
    AmpPoint y{Z * A, {}};
    y.plucker = maximal_minors(y.matrix);
    auto first = std::find_if(y.plucker.begin(), y.plucker.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (first == y.plucker.end()) throw std::domain_error("Z·A has rank below k");
    if (sgn(*first) < 0) {
        const int c = y.matrix.cols() - 1;
        for (int r = 0; r < y.matrix.rows(); ++r) y.matrix.at(r, c) = -y.matrix.at(r, c);
    }
    Rational lead = *first;
    for (auto& q : y.plucker) q /= lead;
    return y;
}

int bracket(const RationalMatrix& Z, const AmpPoint& Y, int i, int j) {
    const int n = Z.cols();
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("bracket index out of range");
    if (i == j) return 0;
    return det_sign(Y.matrix.hconcat(Z.column(i)).hconcat(Z.column(j)));
}

PairSet consecutive_pairs(int n) {
    PairSet p;
    for (int i = 1; i < n; ++i) p.emplace_back(i, i + 1);
    p.emplace_back(1, n);
    p.emplace_back(1, n - 1);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

PairSet all_pairs(int n) {
    PairSet p;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
    return p;
}

SignSignature signature_of(const RationalMatrix& Z, const AmpPoint& Y, const PairSet& pairs) {
    SignSignature s{pairs, {}};
    for (auto [i, j] : pairs) s.signs.push_back(bracket(Z, Y, i, j));
    return s;
}

nlohmann::json to_json(const Report& r) {
    return {{"check", r.check},
            {"n", r.n},
            {"k", r.k},
            {"seed", r.seed},
            {"Z", r.Z ? to_json(*r.Z) : nlohmann::json(nullptr)},
            {"pass", r.pass},
            {"failures", r.failures},
            {"stats", r.stats}};
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mutex;
    for (int t = 0; t < jobs && t < static_cast<int>(count); ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

ZMode parse_zmode(const std::string& s) {
    if (s == "vandermonde") return ZMode::vandermonde;
    if (s == "elementary") return ZMode::elementary;
    throw std::invalid_argument("unknown zmode '" + s + "'");
}

RationalMatrix random_Z(int rows, int n, ZMode mode, std::uint64_t seed) {
    Rng rng(seed);
    return mode == ZMode::vandermonde ? random_vandermonde_Z(rows, n, rng) : elementary_Z(rows, n, rng);
}

namespace {

int expected_pre_sign(Branch b, int k) {
    bool even = b == Branch::iota_pre ? k % 2 == 0 : (k - 1) % 2 == 0;
    return even ? 1 : -1;
}

Report make_report(const std::string& check, const CellCollection& coll, std::uint64_t seed,
                   const RationalMatrix& Z) {
    Report r;
    r.check = check;
    r.n = coll.n;
    r.k = coll.k;
    r.seed = seed;
    r.Z = Z;
    return r;
}

constexpr std::uint64_t kProbeStream = 1ULL << 40;
constexpr int kSpreadExponent = 20;
constexpr int kSpreadFactor = 8;

}  // namespace

Report family_sign_lemma_check(const CellCollection& coll, const RationalMatrix& Z, int samples_per_cell,
                               std::uint64_t seed, int jobs) {
    Report rep = make_report("signs", coll, seed, Z);
    const int n = coll.n, k = coll.k;
    std::vector<nlohmann::json> rows(coll.size(), nlohmann::json::array());
    std::vector<int> ok(coll.size(), 0);
    parallel_for(coll.size(), jobs, [&](std::size_t m) {
        const auto& mem = coll.members[m];
        int want = expected_pre_sign(mem.provenance.branch, k);
        for (int s = 0; s < samples_per_cell; ++s) {
            Rng rng(derive_seed(seed, m, s));
            auto y = apply_Z(Z, mem.cell.sample(rng));
            int got = bracket(Z, y, 1, n - 1);
            if (got == want) {
                ++ok[m];
                continue;
            }
            rows[m].push_back({{"cell", m},
                               {"sample", s},
                               {"branch", to_string(mem.provenance.branch)},
                               {"expected", want},
                               {"got", got},
                               {"zero_bracket", got == 0},
                               {"derivation", mem.cell.describe()}});
        }
    });
    int pre = 0, sig = 0, total = 0;
    for (std::size_t m = 0; m < coll.size(); ++m) {
        for (auto& f : rows[m]) rep.fail(f);
        (coll.members[m].provenance.branch == Branch::iota_pre ? pre : sig) += 1;
        total += ok[m];
    }
    rep.stats = {{"cells", coll.size()},
                 {"iota_pre_cells", pre},
                 {"sigma_cells", sig},
                 {"samples_per_cell", samples_per_cell},
                 {"passing_samples", total},
                 {"expected_iota_pre", expected_pre_sign(Branch::iota_pre, k)},
                 {"expected_sigma", expected_pre_sign(Branch::sigma, k)}};
    return rep;
}

namespace {

// sample with every bracket in `pairs` nonzero; counts resamples
// parameters spread over many orders of magnitude, reaching toward the boundary faces
std::vector<Rational> spread_params(int count, Rng& rng) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) {
        Rational t = rng.positive_rational();
        int e = static_cast<int>(rng.uniform_int(-kSpreadExponent, kSpreadExponent));
        if (e >= 0)
            t *= Rational(Integer(1) << e);
        else
            t /= Rational(Integer(1) << -e);
        out.push_back(t);
    }
    return out;
}

std::pair<AmpPoint, SignSignature> generic_sample(const DerivedCell& c, const RationalMatrix& Z, const PairSet& pairs,
                                                   std::uint64_t seed, int& resampled, bool spread = false) {
    for (std::uint64_t attempt = 0; attempt < 20; ++attempt) {
        Rng rng(derive_seed(seed, attempt, 0x5a));
        auto y = apply_Z(Z, spread ? c.sample(spread_params(c.param_count(), rng)) : c.sample(rng));
        auto sig = signature_of(Z, y, pairs);
        if (std::find(sig.signs.begin(), sig.signs.end(), 0) == sig.signs.end()) return {y, sig};
        ++resampled;
    }
    throw std::runtime_error("could not draw a generic sample of " + c.describe());
}

bool matches(const CellSignature& cs, const SignSignature& s) {
    std::size_t q = 0;
    for (std::size_t p = 0; p < s.pairs.size() && q < cs.constant.pairs.size(); ++p)
        if (s.pairs[p] == cs.constant.pairs[q]) {
            if (s.signs[p] != cs.constant.signs[q]) return false;
            ++q;
        }
    return true;
}

}  // namespace

ProbeResult run_signature_probe(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                                std::uint64_t seed, const PairSet& pairs, int jobs) {
    ProbeResult res;
    const int n = coll.n;
    res.cells.resize(coll.size());
    std::vector<int> resampled(coll.size(), 0);
    std::vector<int> pre_ok(coll.size(), 1), own_ok(coll.size(), 1);
    parallel_for(coll.size(), jobs, [&](std::size_t m) {
        const auto& cell = coll.members[m].cell;
        std::vector<SignSignature> sigs;
        for (int s = 0; s < samples; ++s)
            sigs.push_back(generic_sample(cell, Z, pairs, derive_seed(seed, m, s), resampled[m]).second);
        for (int s = 0; s < kSpreadFactor * samples; ++s)
            sigs.push_back(generic_sample(cell, Z, pairs, derive_seed(seed ^ 0x5bULL, m, s), resampled[m], true).second);
        CellSignature cs;
        cs.samples = static_cast<int>(sigs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            int v = sigs[0].signs[p];
            bool constant = std::all_of(sigs.begin(), sigs.end(), [&](const SignSignature& x) { return x.signs[p] == v; });
            if (constant) {
                cs.constant.pairs.push_back(pairs[p]);
                cs.constant.signs.push_back(v);
            } else if (pairs[p] == std::make_pair(1, n - 1)) {
                pre_ok[m] = 0;
            }
        }
        // fresh points from the cell should carry its own signature
        for (int s = 0; s < 3; ++s) {
            auto fresh = generic_sample(cell, Z, pairs, derive_seed(seed ^ 0xf7e5ULL, m, s), resampled[m]).second;
            if (!matches(cs, fresh)) own_ok[m] = 0;
        }
        res.cells[m] = std::move(cs);
    });
    for (std::size_t m = 0; m < coll.size(); ++m) {
        res.degenerate_resampled += resampled[m];
        res.pre_pair_constant = res.pre_pair_constant && pre_ok[m];
        res.own_signature_ok = res.own_signature_ok && own_ok[m];
    }
    for (std::size_t a = 0; a < coll.size(); ++a)
        for (std::size_t b = a + 1; b < coll.size(); ++b) {
            const auto& A = res.cells[a].constant;
            const auto& B = res.cells[b].constant;
            bool sep = false;
            for (std::size_t p = 0; p < A.pairs.size() && !sep; ++p)
                for (std::size_t q = 0; q < B.pairs.size(); ++q)
                    if (A.pairs[p] == B.pairs[q] && A.signs[p] == -B.signs[q]) {
                        sep = true;
                        break;
                    }
            if (!sep) {
                res.separated = false;
                res.unseparated.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    auto top = DerivedCell::from_mr(top_cell(n, coll.k));
    std::vector<int> count(probes, 0), degenerate(probes, 0);
    parallel_for(static_cast<std::size_t>(probes), jobs, [&](std::size_t p) {
        auto sig = generic_sample(top, Z, pairs, derive_seed(seed, kProbeStream, p), degenerate[p]).second;
        for (const auto& cs : res.cells)
            if (matches(cs, sig)) ++count[p];
    });
    res.probes = probes;
    for (int p = 0; p < probes; ++p) {
        res.degenerate_resampled += degenerate[p];
        if (count[p] == 1)
            ++res.exactly_one;
        else if (count[p] == 0)
            ++res.none;
        else
            ++res.several;
    }
    return res;
}

Report signature_probe(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                       std::uint64_t seed, const PairSet& pairs, int jobs, double min_fraction) {
    Report rep = make_report("probe", coll, seed, Z);
    auto res = run_signature_probe(coll, Z, samples, probes, seed, pairs, jobs);
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cs : res.cells) {
        nlohmann::json c = nlohmann::json::array();
        for (std::size_t p = 0; p < cs.constant.pairs.size(); ++p)
            c.push_back({cs.constant.pairs[p].first, cs.constant.pairs[p].second, cs.constant.signs[p]});
        cells.push_back(std::move(c));
    }
    double frac = probes ? static_cast<double>(res.exactly_one) / probes : 1.0;
    rep.stats = {{"pairs", pairs.size()},
                 {"samples_per_cell", samples},
                 {"constant_pairs", cells},
                 {"separated", res.separated},
                 {"probes", res.probes},
                 {"exactly_one", res.exactly_one},
                 {"no_match", res.none},
                 {"several", res.several},
                 {"degenerate_resampled", res.degenerate_resampled},
                 {"own_signature_ok", res.own_signature_ok},
                 {"pre_pair_constant", res.pre_pair_constant}};
    for (auto [a, b] : res.unseparated) rep.fail({{"unseparated", {a, b}}});
    if (!res.pre_pair_constant) rep.fail({{"pre_pair_not_constant", true}});
    if (frac < min_fraction) rep.fail({{"exactly_one_fraction", frac}, {"required", min_fraction}});
    return rep;
}

Report injectivity_probe(const DerivedCell& cell, const RationalMatrix& Z, int pair_count, std::uint64_t seed) {
    Report rep;
    rep.check = "injectivity";
    rep.n = cell.n();
    rep.k = cell.k();
    rep.seed = seed;
    rep.Z = Z;
    int distinct = 0;
    for (int t = 0; t < pair_count; ++t) {
        Rng rng(derive_seed(seed, t));
        auto p = random_params(cell.param_count(), rng);
        auto q = random_params(cell.param_count(), rng);
        while (q == p) q = random_params(cell.param_count(), rng);
        auto yp = apply_Z(Z, cell.sample(p));
        auto yq = apply_Z(Z, cell.sample(q));
        if (yp.plucker == yq.plucker) {
            nlohmann::json pj = nlohmann::json::array(), qj = nlohmann::json::array();
            for (const auto& x : p) pj.push_back(to_string(x));
            for (const auto& x : q) qj.push_back(to_string(x));
            rep.fail({{"collision", t}, {"p", pj}, {"q", qj}});
        } else {
            ++distinct;
        }
    }
    rep.stats = {{"pairs", pair_count}, {"distinct", distinct}, {"dimension", cell.param_count()},
                 {"derivation", cell.describe()}};
    return rep;
}

namespace {

struct P2 {
    Rational x, y;
    bool operator<(const P2& o) const { return x < o.x || (x == o.x && y < o.y); }
    bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

int orient(const P2& a, const P2& b, const P2& c) {
    Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

Rational area2(const std::vector<P2>& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

// strictly convex hull, counterclockwise
std::vector<P2> convex_hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<P2> h(2 * pts.size());
    std::size_t m = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (m >= 2 && orient(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lo = m + 1; i-- > 0;) {
        while (m >= lo && orient(h[m - 2], h[m - 1], pts[i]) <= 0) --m;
        h[m++] = pts[i];
    }
    h.resize(m - 1);
    return h;
}

// closed triangles (ccw) with disjoint interiors: some edge line weakly separates
bool interiors_disjoint(const std::array<P2, 3>& t, const std::array<P2, 3>& u) {
    auto separates = [](const std::array<P2, 3>& a, const std::array<P2, 3>& b) {
        for (int e = 0; e < 3; ++e) {
            const P2& p = a[e];
            const P2& q = a[(e + 1) % 3];
            if (std::all_of(b.begin(), b.end(), [&](const P2& v) { return orient(p, q, v) <= 0; })) return true;
        }
        return false;
    };
    return separates(t, u) || separates(u, t);
}

}  // namespace

Report k1_polygon_oracle(int n, const RationalMatrix& Z, int samples_per_cell, std::uint64_t seed) {
    Report rep;
    rep.check = "k1";
    rep.n = n;
    rep.k = 1;
    rep.seed = seed;
    rep.Z = Z;
    if (Z.rows() != 3 || Z.cols() != n) throw std::invalid_argument("k1 oracle needs a 3×n Z");
    if (n < 3) throw std::invalid_argument("k1 oracle needs n >= 3");
    std::vector<P2> pts;
    for (int c = 0; c < n; ++c) {
        if (sgn(Z.at(0, c)) <= 0) throw std::invalid_argument("Z first row must be positive");
        pts.push_back({Z.at(1, c) / Z.at(0, c), Z.at(2, c) / Z.at(0, c)});
    }
    auto coll = enumerate_explicit(n, 1);
    std::vector<std::array<P2, 3>> tris;
    Rational tri_area = 0;
    int interior_ok = 0;
    for (std::size_t m = 0; m < coll.size(); ++m) {
        const auto& mem = coll.members[m];
        int a = mem.provenance.alist.at(0);
        auto want = Positroid::from_lists(n, 1, {{1}, {a}, {a + 1}});
        if (mem.positroid != want)
            rep.fail({{"cell", m}, {"a", a}, {"support", to_json(mem.positroid)}});
        auto Z1 = Z.column(1), Za = Z.column(a), Zb = Z.column(a + 1);
        int d = det_sign(Z1.hconcat(Za).hconcat(Zb));
        if (d <= 0) rep.fail({{"cell", m}, {"a", a}, {"triangle_orientation", d}});
        for (int s = 0; s < samples_per_cell; ++s) {
            Rng rng(derive_seed(seed, m, s));
            auto y = apply_Z(Z, mem.cell.sample(rng));
            const auto& Y = y.matrix;
            int b1 = det_sign(Y.hconcat(Za).hconcat(Zb)) * d;
            int b2 = det_sign(Z1.hconcat(Y).hconcat(Zb)) * d;
            int b3 = det_sign(Z1.hconcat(Za).hconcat(Y)) * d;
            if (b1 > 0 && b2 > 0 && b3 > 0)
                ++interior_ok;
            else
                rep.fail({{"cell", m}, {"a", a}, {"sample", s}, {"barycentric_signs", {b1, b2, b3}}});
        }
        std::array<P2, 3> t{pts[0], pts[a - 1], pts[a]};
        if (orient(t[0], t[1], t[2]) < 0) std::swap(t[1], t[2]);
        if (orient(t[0], t[1], t[2]) == 0) rep.fail({{"cell", m}, {"a", a}, {"degenerate_triangle", true}});
        tri_area += area2({t[0], t[1], t[2]});
        tris.push_back(t);
    }
    int overlaps = 0;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (!interiors_disjoint(tris[i], tris[j])) {
                ++overlaps;
                rep.fail({{"overlapping_triangles", {i + 2, j + 2}}});
            }
    auto hull = convex_hull(pts);
    Rational hull_area = area2(hull);
    bool all_vertices = hull.size() == pts.size();
    if (!all_vertices) rep.fail({{"hull_vertices", hull.size()}, {"points", pts.size()}});
    if (tri_area != hull_area)
        rep.fail({{"area_mismatch", true}, {"triangles", to_string(tri_area / 2)}, {"hull", to_string(hull_area / 2)}});
    rep.stats = {{"triangles", tris.size()},
                 {"interior_samples", interior_ok},
                 {"overlapping_pairs", overlaps},
                 {"hull_vertices", hull.size()},
                 {"triangle_area", to_string(tri_area / 2)},
                 {"hull_area", to_string(hull_area / 2)}};
    return rep;
}

Report prop_cyc_check(int n, int k, std::uint64_t seed) {
    Report rep;
    rep.check = "cyc";
    rep.n = n;
    rep.k = k;
    rep.seed = seed;
    if (k < 1 || n - k < 2) throw std::invalid_argument("prop_cyc_check needs k >= 1 and n-k >= 2");
    auto base = k == 1 ? DerivedCell::point(n - 1) : DerivedCell::from_mr(top_cell(n - 1, k - 1));
    auto inc = base.iota_inc();
    // iota_inc of the top cell is the MR cell (1, s_[n-k+1,2]...s_[n-1,k])
    std::vector<int> a_inc(k);
    a_inc[0] = 0;
    for (int r = 2; r <= k; ++r) a_inc[r - 1] = n - k + r - 1;
    auto inc_cell = make_cell(n, k, wj_word(a_inc, k, n), SubexprMask(wj_word(a_inc, k, n).size(), false));
    Positroid p_inc = extract_positroid(inc, derive_seed(seed, 1));
    if (p_inc != positroid_of(inc_cell)) rep.fail({{"stage", "iota_inc_top"}, {"got", to_json(p_inc)}});

    auto mid = inc.y(1).y(2);
    Positroid p_mid = extract_positroid(mid, derive_seed(seed, 2));
    std::vector<Subset> mid_want;
    for (const auto& s : k_subsets(n, k))
        if (s[0] <= 3) mid_want.push_back(subset_of(s));
    if (p_mid != Positroid(n, k, mid_want, false)) rep.fail({{"stage", "min_at_most_3"}, {"got", to_json(p_mid)}});

    Positroid lhs = extract_positroid(mid.sigma(-2), derive_seed(seed, 3));
    auto word = top_cell(n, k).word;
    auto w = word_to_perm(s_range(n - 2, k + 1, n));
    auto rhs_cell = cell_from_interval(w, word, k);
    Positroid rhs = positroid_of(rhs_cell);
    if (lhs != rhs) rep.fail({{"stage", "equality"}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
    std::vector<Subset> fam;
    for (const auto& s : k_subsets(n, k))
        if (s.front() == 1 || std::find(s.begin(), s.end(), n - 1) != s.end() || s.back() == n)
            fam.push_back(subset_of(s));
    if (rhs != Positroid(n, k, fam, false)) rep.fail({{"stage", "three_families"}, {"rhs", to_json(rhs)}});
    rep.stats = {{"lhs", to_json(lhs)}, {"rhs_cell", render_dotted(rhs_cell)}, {"bases", rhs.size()}};
    return rep;
}

Report cyclic_collection_check(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                               std::uint64_t seed, const PairSet& pairs, int jobs) {
    Report rep = make_report("cyclic", coll, seed, Z);
    const int n = coll.n, k = coll.k;
    CellCollection shifted{n, k, coll.variant, {}};
    for (std::size_t m = 0; m < coll.size(); ++m) {
        const auto& mem = coll.members[m];
        auto c = mem.cell.sigma(1);
        Positroid p = act_sigma(mem.cell, 1);
        if (p != shift(mem.positroid, 1)) rep.fail({{"cell", m}, {"shift_mismatch", to_json(p)}});
        if (act_sigma(mem.cell, n) != mem.positroid) rep.fail({{"cell", m}, {"full_turn_not_identity", true}});
        if (c.param_count() != 2 * k) rep.fail({{"cell", m}, {"dimension", c.param_count()}});
        shifted.members.push_back({p, c, mem.provenance});
    }
    auto set = shifted.positroid_set();
    bool distinct = std::adjacent_find(set.begin(), set.end()) == set.end();
    if (!distinct) rep.fail({{"duplicate_members", true}});
    auto probe = run_signature_probe(shifted, Z, samples, probes, seed, pairs, jobs);
    if (!probe.separated) rep.fail({{"shifted_unseparated", probe.unseparated.size()}});
    double frac = probes ? static_cast<double>(probe.exactly_one) / probes : 1.0;
    if (frac < 0.95) rep.fail({{"shifted_exactly_one_fraction", frac}});
    rep.stats = {{"members", shifted.size()},
                 {"distinct", distinct},
                 {"separated", probe.separated},
                 {"probes", probe.probes},
                 {"exactly_one", probe.exactly_one}};
    return rep;
}

}  // namespace amp2
