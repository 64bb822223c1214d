#include "amp2/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>

#include "amp2/combinat.hpp"
#include "amp2/harness.hpp"

namespace amp2 {

namespace {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int budget(int fallback) {
    if (const char* env = std::getenv("AMP2_BUDGET_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("AMP2_BUDGET_N must be an integer");
        }
    }
    return fallback;
}

void require_budget(const std::string& what, int n, int fallback) {
    int b = budget(fallback);
    if (n > b) throw BudgetExceeded(what + ": n=" + std::to_string(n) + " exceeds budget " + std::to_string(b));
}

void require_range(int n, int k) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("need 1 <= k <= n-2");
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int cmd_gen(int n, int k, const std::string& method, const std::string& variant, const std::string& format,
            std::ostream& out) {
    require_range(n, k);
    require_budget("gen", n, 10);
    CellCollection coll = method == "explicit" ? enumerate_explicit(n, k) : generate_collection(n, k, parse_variant(variant));
    if (format == "json") {
        out << to_json(coll).dump() << "\n";
        return 0;
    }
    for (const auto& m : coll.members) {
        const MRCell* c = m.cell.mr();
        out << (c ? render_dotted(*c) : render_dotted(cell_of_positroid(m.positroid))) << "\n";
    }
    return 0;
}

int cmd_convert(const std::string& text, int n, int k, const std::string& to, const std::string& convention,
                std::ostream& out, std::ostream& err) {
    Positroid p;
    LeDiagram le;
    bool done = false;
    if (convention != "dual") {
        try {
            MRCell c = parse_dotted(text, n, k);
            p = positroid_of(c);
            le = le_of(c);
            done = true;
        } catch (const std::invalid_argument& e) {
            if (convention == "direct") throw;
            err << "note: '" << text << "' is not a cell of Gr_{" << k << "," << n << "} (" << e.what() << ")\n";
        }
    }
    if (!done) {
        if (n - k < 1) throw std::invalid_argument("no dual Grassmannian");
        MRCell c = parse_dotted(text, n, n - k);
        p = dual(positroid_of(c));
        le = transpose(le_of(c));
        err << "note: read in the dual convention as a cell of Gr_{" << n - k << "," << n
            << "}, reporting the dual positroid in Gr_{" << k << "," << n << "}\n";
    }
    if (to == "positroid")
        out << to_json(p).dump() << "\n";
    else if (to == "decperm")
        out << to_json(decperm_of(p)).dump() << "\n";
    else
        out << to_text(le);
    return 0;
}

struct VerifyOptions {
    int n = 0;
    int k = 0;
    std::vector<std::string> checks;
    std::uint64_t seed = 1;
    int samples = 10;
    int zcount = 5;
    int probes = 200;
    int jobs = 1;
    std::string zmode = "vandermonde";
    std::string variant = "twisted";
    std::string pairs = "all";
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const int n = o.n, k = o.k;
    const ZMode zm = parse_zmode(o.zmode);
    const Variant var = parse_variant(o.variant);
    if (var == Variant::explicit_family) throw std::invalid_argument("verify uses the recursive variants");
    const PairSet pairs = o.pairs == "consecutive" ? consecutive_pairs(n) : all_pairs(n);
    static const std::vector<std::string> known = {"cardinality", "identity", "signs", "k1", "cyc", "probe"};
    for (const auto& c : o.checks)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw std::invalid_argument("unknown check '" + c + "'");
    // validate everything before running anything
    for (const auto& c : o.checks) {
        if (c == "k1") {
            if (k != 1) throw std::invalid_argument("the k1 check needs --k 1");
            if (n < 3) throw std::invalid_argument("need n >= 3");
            require_budget("k1", n, 12);
            continue;
        }
        require_range(n, k);
        if (c == "cardinality" || c == "cyc") require_budget(c, n, 10);
        if (c == "identity") require_budget(c, n, 9);
        if (c == "signs" || c == "probe") require_budget(c, n, 8);
    }
    auto zs = [&](int rows) {
        std::vector<std::pair<std::uint64_t, RationalMatrix>> v;
        for (int z = 0; z < o.zcount; ++z) {
            std::uint64_t s = derive_seed(o.seed, 0x2000 + z);
            v.emplace_back(s, random_Z(rows, n, zm, s));
        }
        return v;
    };
    bool all_pass = true;
    auto emit = [&](Report r, int z_index) {
        if (z_index >= 0) r.stats["z_index"] = z_index;
        all_pass = all_pass && r.pass;
        out << to_json(r).dump() << "\n";
    };
    for (const auto& c : o.checks) {
        if (c == "cardinality") {
            Report r;
            r.check = c;
            r.n = n;
            r.k = k;
            r.seed = o.seed;
            long long want = binom(n - 2, k);
            nlohmann::json counts;
            auto test = [&](const std::string& name, const CellCollection& coll) {
                auto set = coll.positroid_set();
                bool distinct = std::adjacent_find(set.begin(), set.end()) == set.end();
                counts[name] = coll.size();
                if (static_cast<long long>(coll.size()) != want || !distinct)
                    r.fail({{"family", name}, {"count", coll.size()}, {"distinct", distinct}});
            };
            test("twisted", generate_collection(n, k, Variant::twisted));
            test("plain", generate_collection(n, k, Variant::plain));
            test("explicit", enumerate_explicit(n, k));
            r.stats = {{"expected", want}, {"counts", counts}};
            emit(r, -1);
        } else if (c == "identity") {
            Report r;
            r.check = c;
            r.n = n;
            r.k = k;
            r.seed = o.seed;
            auto id = verify_recursive_identity(n, k);
            if (!id.holds) r.fail(to_json(id));
            bool same = generate_collection(n, k, Variant::twisted).positroid_set() == enumerate_explicit(n, k).positroid_set();
            if (!same) r.fail({{"twisted_recursion_differs_from_explicit", true}});
            r.stats = {{"pre_branch", id.pre_branch}, {"sigma_branch", id.sigma_branch}, {"recursion_equals_explicit", same}};
            emit(r, -1);
        } else if (c == "signs") {
            const auto& coll = generate_collection(n, k, var);
            int z = 0;
            for (auto& [s, Z] : zs(k + 2)) emit(family_sign_lemma_check(coll, Z, o.samples, s, o.jobs), z++);
        } else if (c == "k1") {
            int z = 0;
            for (auto& [s, Z] : zs(3)) emit(k1_polygon_oracle(n, Z, o.samples, s), z++);
        } else if (c == "cyc") {
            emit(prop_cyc_check(n, k, o.seed), -1);
            const auto& coll = generate_collection(n, k, var);
            auto [s, Z] = zs(k + 2).front();
            emit(cyclic_collection_check(coll, Z, std::max(o.samples, 20), o.probes, s, pairs, o.jobs), 0);
        } else if (c == "probe") {
            const auto& coll = generate_collection(n, k, var);
            int z = 0;
            for (auto& [s, Z] : zs(k + 2)) {
                emit(signature_probe(coll, Z, std::max(o.samples, 20), o.probes, s, pairs, o.jobs), z);
                for (std::size_t m = 0; m < coll.size(); ++m) {
                    auto r = injectivity_probe(coll.members[m].cell, Z, 50, derive_seed(s, 0x1ee7, m));
                    r.stats["cell"] = m;
                    emit(r, z);
                }
                ++z;
            }
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"m=2 amplituhedron cell collections: generation, conversion, verification"};
    app.require_subcommand(1);

    int gn = 0, gk = 0;
    std::string method = "recursive", variant = "twisted", format = "json";
    auto* gen = app.add_subcommand("gen", "print the cell collection");
    gen->add_option("--n", gn)->required();
    gen->add_option("--k", gk)->required();
    gen->add_option("--method", method)->check(CLI::IsMember({"recursive", "explicit"}));
    gen->add_option("--variant", variant)->check(CLI::IsMember({"twisted", "plain"}));
    gen->add_option("--format", format)->check(CLI::IsMember({"json", "dotted"}));

    int cn = 0, ck = 0;
    std::string cell, to = "positroid", convention = "auto";
    auto* conv = app.add_subcommand("convert", "convert a dotted cell to another encoding");
    conv->add_option("--cell", cell)->required();
    conv->add_option("--n", cn)->required();
    conv->add_option("--k", ck)->required();
    conv->add_option("--to", to)->check(CLI::IsMember({"positroid", "decperm", "le"}));
    conv->add_option("--convention", convention, "auto falls back to the dual Grassmannian")
        ->check(CLI::IsMember({"auto", "direct", "dual"}));

    VerifyOptions vo;
    std::string checks = "cardinality";
    auto* ver = app.add_subcommand("verify", "run harness checks, one JSON report per line");
    ver->add_option("--n", vo.n)->required();
    ver->add_option("--k", vo.k)->required();
    ver->add_option("--checks", checks, "comma-separated: cardinality,identity,signs,k1,cyc,probe");
    ver->add_option("--seed", vo.seed);
    ver->add_option("--samples", vo.samples)->check(CLI::PositiveNumber);
    ver->add_option("--zcount", vo.zcount)->check(CLI::PositiveNumber);
    ver->add_option("--probes", vo.probes)->check(CLI::NonNegativeNumber);
    ver->add_option("--zmode", vo.zmode)->check(CLI::IsMember({"vandermonde", "elementary"}));
    ver->add_option("--variant", vo.variant)->check(CLI::IsMember({"twisted", "plain"}));
    ver->add_option("--pairs", vo.pairs)->check(CLI::IsMember({"all", "consecutive"}));
    ver->add_option("--jobs", vo.jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gn, gk, method, variant, format, out);
        if (conv->parsed()) return cmd_convert(cell, cn, ck, to, convention, out, err);
        std::stringstream ss(checks);
        for (std::string c; std::getline(ss, c, ',');)
            if (!c.empty()) vo.checks.push_back(c);
        return cmd_verify(vo, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace amp2
