#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "amp2/explicit.hpp"
#include "amp2/recursion.hpp"

namespace amp2 {

struct AmpPoint {
    RationalMatrix matrix;          // (k+2)×k, first nonzero maximal minor positive
    std::vector<Rational> plucker;  // first nonzero entry is 1
};

AmpPoint apply_Z(const RationalMatrix& Z, const RationalMatrix& A);
int bracket(const RationalMatrix& Z, const AmpPoint& Y, int i, int j);

using PairSet = std::vector<std::pair<int, int>>;
// {(i,i+1)} ∪ {(1,n)} ∪ {(1,n-1)}
PairSet consecutive_pairs(int n);
// every (i,j) with i < j
PairSet all_pairs(int n);

struct SignSignature {
    PairSet pairs;
    std::vector<int> signs;
};

SignSignature signature_of(const RationalMatrix& Z, const AmpPoint& Y, const PairSet& pairs);

struct Report {
    std::string check;
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::optional<RationalMatrix> Z;
    bool pass = true;
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json stats = nlohmann::json::object();

    void fail(nlohmann::json f) {
        pass = false;
        failures.push_back(std::move(f));
    }
};

nlohmann::json to_json(const Report& r);

// runs fn(0..count-1) on up to `jobs` threads
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

enum class ZMode { vandermonde, elementary };
ZMode parse_zmode(const std::string& s);
RationalMatrix random_Z(int rows, int n, ZMode mode, std::uint64_t seed);

Report family_sign_lemma_check(const CellCollection& coll, const RationalMatrix& Z, int samples_per_cell,
                               std::uint64_t seed, int jobs = 1);

struct CellSignature {
    SignSignature constant;  // pairs whose sign never changed over the samples
    int samples = 0;
};

struct ProbeResult {
    std::vector<CellSignature> cells;
    bool separated = true;
    std::vector<std::pair<int, int>> unseparated;  // cell index pairs
    int probes = 0;
    int exactly_one = 0;
    int none = 0;
    int several = 0;
    int degenerate_resampled = 0;
    bool own_signature_ok = true;
    bool pre_pair_constant = true;  // (1,n-1) constant in every cell
};

ProbeResult run_signature_probe(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                                std::uint64_t seed, const PairSet& pairs, int jobs = 1);
Report signature_probe(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                       std::uint64_t seed, const PairSet& pairs, int jobs = 1, double min_fraction = 0.95);

Report injectivity_probe(const DerivedCell& cell, const RationalMatrix& Z, int pair_count, std::uint64_t seed);

Report k1_polygon_oracle(int n, const RationalMatrix& Z, int samples_per_cell, std::uint64_t seed);

Report prop_cyc_check(int n, int k, std::uint64_t seed = 0);

Report cyclic_collection_check(const CellCollection& coll, const RationalMatrix& Z, int samples, int probes,
                               std::uint64_t seed, const PairSet& pairs, int jobs = 1);

}  // namespace amp2
