#include "amp2/recursion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace amp2 {

struct DerivedCell::Node {
    Kind kind;
    int n;
    int k;
    int params;
    int arg = 0;  // letter for y, power for sigma
    std::shared_ptr<const Node> child;
    std::shared_ptr<const MRCell> cell;
};

DerivedCell DerivedCell::from_mr(const MRCell& c) {
    auto nd = std::make_shared<Node>(Node{Kind::mr, c.n, c.k, c.param_count(), 0, nullptr,
                                          std::make_shared<const MRCell>(c)});
    return DerivedCell(std::move(nd));
}

DerivedCell DerivedCell::point(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    return DerivedCell(std::make_shared<Node>(Node{Kind::point, n, 0, 0, 0, nullptr, nullptr}));
}

DerivedCell DerivedCell::iota_pre() const {
    return DerivedCell(std::make_shared<Node>(Node{Kind::iota_pre, n() + 1, k(), param_count(), 0, node_, nullptr}));
}

DerivedCell DerivedCell::iota_inc() const {
    return DerivedCell(
        std::make_shared<Node>(Node{Kind::iota_inc, n() + 1, k() + 1, param_count(), 0, node_, nullptr}));
}

DerivedCell DerivedCell::y(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("y letter out of range");
    return DerivedCell(std::make_shared<Node>(Node{Kind::y_action, n(), k(), param_count() + 1, i, node_, nullptr}));
}

DerivedCell DerivedCell::sigma(int p) const {
    if (k() < 1) throw std::invalid_argument("sigma needs k >= 1");
    return DerivedCell(std::make_shared<Node>(Node{Kind::sigma_action, n(), k(), param_count(), p, node_, nullptr}));
}

DerivedCell::Kind DerivedCell::kind() const { return node_->kind; }
int DerivedCell::n() const { return node_->n; }
int DerivedCell::k() const { return node_->k; }
int DerivedCell::param_count() const { return node_->params; }
const MRCell* DerivedCell::mr() const { return node_->cell.get(); }

namespace {

template <class NodePtr>
RationalMatrix run(const NodePtr& nd, const std::vector<Rational>& params, std::size_t& pos) {
    using K = DerivedCell::Kind;
    switch (nd->kind) {
        case K::mr: {
            std::vector<Rational> own(params.begin() + pos, params.begin() + pos + nd->params);
            pos += nd->params;
            return sample_point(*nd->cell, own).matrix;
        }
        case K::point:
            return RationalMatrix(nd->n, 0);
        case K::iota_pre: {
            auto a = run(nd->child, params, pos);
            RationalMatrix out(a.rows() + 1, a.cols());
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
            return out;
        }
        case K::iota_inc: {
            auto a = run(nd->child, params, pos);
            RationalMatrix out(a.rows() + 1, a.cols() + 1);
            out.at(0, 0) = 1;
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c < a.cols(); ++c) out.at(r + 1, c + 1) = a.at(r, c);
            return out;
        }
        case K::y_action: {
            auto a = run(nd->child, params, pos);
            left_y(a, nd->arg, params[pos++]);
            return a;
        }
        case K::sigma_action: {
            auto a = run(nd->child, params, pos);
            left_sigma(a, nd->arg);
            return a;
        }
    }
    throw std::logic_error("unknown node kind");
}

}  // namespace

RationalMatrix DerivedCell::sample(const std::vector<Rational>& params) const {
    if (static_cast<int>(params.size()) != param_count())
        throw std::invalid_argument("expected " + std::to_string(param_count()) + " parameters");
    for (const auto& t : params)
        if (sgn(t) <= 0) throw std::invalid_argument("parameters must be positive");
    std::size_t pos = 0;
    return run(node_, params, pos);
}

RationalMatrix DerivedCell::sample(Rng& rng) const { return sample(random_params(param_count(), rng)); }

std::string DerivedCell::describe() const {
    switch (node_->kind) {
        case Kind::mr:
            return "[" + render_dotted(*node_->cell) + "]";
        case Kind::point:
            return "pt" + std::to_string(node_->n);
        case Kind::iota_pre:
            return "pre(" + DerivedCell(node_->child).describe() + ")";
        case Kind::iota_inc:
            return "inc(" + DerivedCell(node_->child).describe() + ")";
        case Kind::y_action:
            return "y" + std::to_string(node_->arg) + " " + DerivedCell(node_->child).describe();
        case Kind::sigma_action:
            return "s^" + std::to_string(node_->arg) + " " + DerivedCell(node_->child).describe();
    }
    return "?";
}

Positroid extract_positroid(const DerivedCell& c, std::uint64_t seed, int samples) {
    Rng rng(seed);
    Positroid p = positroid_of_matrix(c.sample(rng));
    for (int s = 1; s < samples; ++s)
        if (positroid_of_matrix(c.sample(rng)) != p)
            throw InstabilityError("positroid of " + c.describe() + " depends on the sample");
    return p;
}

Positroid iota_pre(const Positroid& p) { return Positroid(p.n() + 1, p.k(), p.bases(), false); }

Positroid iota_inc(const Positroid& p) {
    std::vector<Subset> b;
    for (Subset s : p.bases()) b.push_back((s << 1) | 1U);
    return Positroid(p.n() + 1, p.k() + 1, std::move(b), false);
}

Positroid shift(const Positroid& p, int power) {
    const int n = p.n();
    int q = ((power % n) + n) % n;
    std::vector<Subset> b;
    for (Subset s : p.bases()) {
        Subset t = 0;
        for (int e : elements(s)) t |= Subset(1) << ((e - 1 + q) % n);
        b.push_back(t);
    }
    return Positroid(n, p.k(), std::move(b), false);
}

Positroid y_closure(const Positroid& p, int i) {
    if (i < 1 || i >= p.n()) throw std::invalid_argument("letter out of range");
    std::vector<Subset> b = p.bases();
    const Subset lo = Subset(1) << (i - 1), hi = Subset(1) << i;
    for (Subset s : p.bases())
        if ((s & lo) && !(s & hi)) b.push_back((s & ~lo) | hi);
    return Positroid(p.n(), p.k(), std::move(b), false);
}

namespace {
std::uint64_t op_seed(const DerivedCell& c, int op) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char ch : c.describe()) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    return derive_seed(h, static_cast<std::uint64_t>(op));
}
}  // namespace

Positroid iota_pre(const DerivedCell& c) { return extract_positroid(c.iota_pre(), op_seed(c, 1)); }
Positroid iota_inc(const DerivedCell& c) { return extract_positroid(c.iota_inc(), op_seed(c, 2)); }
Positroid act_y(const DerivedCell& c, int i) { return extract_positroid(c.y(i), op_seed(c, 10 + i)); }
Positroid act_sigma(const DerivedCell& c, int p) { return extract_positroid(c.sigma(p), op_seed(c, 1000 + p)); }

std::string to_string(Variant v) {
    switch (v) {
        case Variant::twisted:
            return "twisted";
        case Variant::plain:
            return "plain";
        case Variant::explicit_family:
            return "explicit";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    if (s == "twisted") return Variant::twisted;
    if (s == "plain") return Variant::plain;
    if (s == "explicit") return Variant::explicit_family;
    throw std::invalid_argument("unknown variant '" + s + "'");
}

std::string to_string(Branch b) {
    switch (b) {
        case Branch::base:
            return "base";
        case Branch::iota_pre:
            return "iota_pre";
        case Branch::sigma:
            return "sigma_branch";
    }
    return "?";
}

std::vector<Positroid> CellCollection::positroids() const {
    std::vector<Positroid> out;
    for (const auto& m : members) out.push_back(m.positroid);
    return out;
}

std::vector<Positroid> CellCollection::positroid_set() const {
    auto out = positroids();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::recursive_mutex memo_mutex;
std::map<std::tuple<int, int, int>, std::unique_ptr<CellCollection>> memo;

CellCollection build(int n, int k, Variant v) {
    CellCollection out{n, k, v, {}};
    if (k == 0) {
        auto c = DerivedCell::point(n);
        out.members.push_back({Positroid(n, 0, {0}, false), c, {Branch::base, "point"}});
        return out;
    }
    if (n == k + 2) {
        auto c = DerivedCell::from_mr(top_cell(n, k));
        out.members.push_back({extract_positroid(c, op_seed(c, 0)), c, {Branch::base, "top"}});
        return out;
    }
    const auto& pre = generate_collection(n - 1, k, v);
    for (std::size_t i = 0; i < pre.members.size(); ++i) {
        auto c = pre.members[i].cell.iota_pre();
        out.members.push_back({extract_positroid(c, op_seed(c, 0)), c,
                               {Branch::iota_pre, std::to_string(i), static_cast<int>(i)}});
    }
    const std::size_t first_branch = out.members.size();
    const auto& inc = generate_collection(n - 1, k - 1, v);
    for (std::size_t i = 0; i < inc.members.size(); ++i) {
        auto c = inc.members[i].cell;
        if (v == Variant::twisted && k - 1 >= 1) c = c.sigma(kSubcollectionTwist);
        c = c.iota_inc().y(1).y(2).sigma(-2);
        out.members.push_back(
            {extract_positroid(c, op_seed(c, 0)), c, {Branch::sigma, std::to_string(i), static_cast<int>(i)}});
    }
    std::vector<Positroid> a, b;
    for (std::size_t i = 0; i < out.members.size(); ++i)
        (i < first_branch ? a : b).push_back(out.members[i].positroid);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Positroid> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    if (!both.empty())
        throw std::logic_error("recursion branches overlap at (" + std::to_string(n) + "," + std::to_string(k) + ")");
    return out;
}

}  // namespace

const CellCollection& generate_collection(int n, int k, Variant v) {
    if (v == Variant::explicit_family) throw std::invalid_argument("explicit family is built by enumerate_explicit");
    if (k < 0 || k > n - 2) throw std::invalid_argument("generate_collection needs 0 <= k <= n-2");
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    auto key = std::make_tuple(n, k, static_cast<int>(v));
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
    auto built = std::make_unique<CellCollection>(build(n, k, v));
    auto& ref = *built;
    memo.emplace(key, std::move(built));
    return ref;
}

std::pair<Permutation, ReducedWord> interval_of_positroid(const Positroid& p) {
    auto c = cell_of_positroid(p);
    return {c.w(), c.word};
}

MRCell cell_of_positroid(const Positroid& p) {
    const int n = p.n(), k = p.k();
    if (k < 1 || k >= n) throw std::invalid_argument("positroid must have 1 <= k < n");
    if (n > 10) throw std::invalid_argument("interval lookup is limited to n <= 10");
    // Gale-maximal basis fixes w'; Gale-minimal basis fixes w([k])
    auto lists = p.basis_lists();
    std::vector<int> a;
    for (int e : lists.back()) a.push_back(e - 1);
    auto word = wj_word(a, k, n);
    Permutation wp = word_to_perm(word);
    const std::vector<int>& low = lists.front();
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
        if (!std::binary_search(low.begin(), low.end(), e)) rest.push_back(e);
    std::vector<int> head = low;
    std::vector<std::pair<int, MRCell>> hits;
    do {
        std::vector<int> tail = rest;
        do {
            std::vector<int> img = head;
            img.insert(img.end(), tail.begin(), tail.end());
            Permutation w(img);
            if (!bruhat_leq(w, wp)) continue;
            MRCell c{n, k, word, positive_subexpression(w, word)};
            if (positroid_of(c) == p) return c;
        } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(head.begin(), head.end()));
    throw std::invalid_argument("no cell of Gr_{" + std::to_string(k) + "," + std::to_string(n) + "} has positroid " +
                                p.to_string());
}

nlohmann::json to_json(const CellCollection& c) {
    nlohmann::json cells = nlohmann::json::array(), prov = nlohmann::json::array();
    for (const auto& m : c.members) {
        cells.push_back(to_json(m.positroid));
        nlohmann::json pj = {{"branch", to_string(m.provenance.branch)}, {"detail", m.provenance.detail},
                             {"derivation", m.cell.describe()}};
        if (m.provenance.child >= 0) pj["child"] = m.provenance.child;
        if (!m.provenance.alist.empty()) pj["alist"] = m.provenance.alist;
        prov.push_back(std::move(pj));
    }
    return {{"n", c.n}, {"k", c.k}, {"variant", to_string(c.variant)}, {"cells", cells}, {"provenance", prov}};
}

}  // namespace amp2
