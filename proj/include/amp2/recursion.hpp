#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "amp2/cells.hpp"

namespace amp2 {

// A cell known through a way of sampling it: an MR cell or the point of Gr_{0,n},
// followed by embeddings and group actions.
class DerivedCell {
public:
    enum class Kind { mr, point, iota_pre, iota_inc, y_action, sigma_action };

    static DerivedCell from_mr(const MRCell& c);
    static DerivedCell point(int n);

    DerivedCell iota_pre() const;
    DerivedCell iota_inc() const;
    DerivedCell y(int i) const;
    DerivedCell sigma(int p) const;

    Kind kind() const;
    int n() const;
    int k() const;
    int param_count() const;
    const MRCell* mr() const;

    // params: innermost cell first, then one per y action in order of application
    RationalMatrix sample(const std::vector<Rational>& params) const;
    RationalMatrix sample(Rng& rng) const;
    std::string describe() const;

private:
    struct Node;
    explicit DerivedCell(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// positroid of the derived cell, required identical over `samples` independent samples
Positroid extract_positroid(const DerivedCell& c, std::uint64_t seed, int samples = 3);

// combinatorial images on positroids
Positroid iota_pre(const Positroid& p);
Positroid iota_inc(const Positroid& p);
Positroid shift(const Positroid& p, int power);
// bases of y_i(t)·x for TNN x in the cell, t > 0
Positroid y_closure(const Positroid& p, int i);

// realized on samples and re-extracted
Positroid iota_pre(const DerivedCell& c);
Positroid iota_inc(const DerivedCell& c);
Positroid act_y(const DerivedCell& c, int i);
Positroid act_sigma(const DerivedCell& c, int p);

enum class Variant { twisted, plain, explicit_family };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

enum class Branch { base, iota_pre, sigma };
std::string to_string(Branch b);

struct Provenance {
    Branch branch = Branch::base;
    std::string detail;  // "top", "point", child index, or the a-list
    int child = -1;
    std::vector<int> alist;
};

struct CollectionMember {
    Positroid positroid;
    DerivedCell cell;
    Provenance provenance;
};

struct CellCollection {
    int n = 0;
    int k = 0;
    Variant variant = Variant::twisted;
    std::vector<CollectionMember> members;

    std::size_t size() const { return members.size(); }
    std::vector<Positroid> positroids() const;
    // sorted, for set comparison
    std::vector<Positroid> positroid_set() const;
};

// memoized under (n,k,variant); 0 <= k <= n-2 (k = 0 is the point)
const CellCollection& generate_collection(int n, int k, Variant v = Variant::twisted);

// the twist applied to the (n-1,k-1) sub-collection in the twisted variant
constexpr int kSubcollectionTwist = 1;

std::pair<Permutation, ReducedWord> interval_of_positroid(const Positroid& p);
MRCell cell_of_positroid(const Positroid& p);

nlohmann::json to_json(const CellCollection& c);

}  // namespace amp2
