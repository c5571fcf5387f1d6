#include "depth/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace depth {

namespace {

std::string key_of(const std::vector<int>& img) {
    std::string k;
    k.reserve(img.size() * 2);
    for (int v : img) {
        k.push_back(static_cast<char>(v & 0xff));
        k.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return k;
}

}  // namespace

Permutation::Permutation(std::size_t degree) : img_(degree) {
    if (degree == 0) throw std::invalid_argument("Permutation: degree zero");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("Permutation: degree zero");
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || b < 1 || static_cast<std::size_t>(a) > degree || static_cast<std::size_t>(b) > degree)
                throw std::invalid_argument("from_cycles: point out of range");
            if (img[static_cast<std::size_t>(a - 1)] != a - 1)
                throw std::invalid_argument("from_cycles: cycles are not disjoint");
            img[static_cast<std::size_t>(a - 1)] = b - 1;
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (degree() != o.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[i] = img_[static_cast<std::size_t>(o.img_[i])];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (std::size_t i = 0; i < degree(); ++i) img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

int Permutation::order() const {
    int n = 1;
    Permutation p = *this;
    while (!p.is_identity()) {
        p = p.compose(*this);
        ++n;
    }
    return n;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
        if (seen[start] || img_[start] == static_cast<int>(start)) continue;
        std::vector<int> cyc;
        std::size_t cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(static_cast<int>(cur) + 1);
            cur = static_cast<std::size_t>(img_[cur]);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string cycle_string(const Permutation& p) {
    auto cyc = p.cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
        s.push_back('(');
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s.push_back(' ');
            s += std::to_string(c[i]);
        }
        s.push_back(')');
    }
    return s;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
    enumerate(order_cap);
    compute_classes();
}

void PermGroup::enumerate(std::size_t cap) {
    std::vector<Permutation> frontier{Permutation(degree_)};
    std::vector<Permutation> all{Permutation(degree_)};
    std::unordered_map<std::string, bool> seen;
    seen[key_of(all[0].images())] = true;
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : generators_) {
                Permutation q = g.compose(p);
                std::string k = key_of(q.images());
                if (seen.emplace(std::move(k), true).second) {
                    if (all.size() + 1 > cap) throw std::runtime_error("PermGroup: order cap exceeded");
                    all.push_back(q);
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    elements_ = std::move(all);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[key_of(elements_[i].images())] = i;
    identity_ = index_of(Permutation(degree_));
}

bool PermGroup::contains(const Permutation& p) const {
    return p.degree() == degree_ && index_.count(key_of(p.images())) > 0;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
    auto it = index_.find(key_of(p.images()));
    if (it == index_.end()) throw std::invalid_argument("PermGroup: element not in group");
    return it->second;
}

std::size_t PermGroup::mul(std::size_t i, std::size_t j) const {
    return index_of(elements_[i].compose(elements_[j]));
}

std::size_t PermGroup::inv(std::size_t i) const { return index_of(elements_[i].inverse()); }

std::size_t PermGroup::exponent() const {
    std::size_t e = 1;
    for (std::size_t i = 0; i < order(); ++i) e = std::lcm(e, element_order(i));
    return e;
}

void PermGroup::compute_classes() {
    std::size_t n = order();
    std::vector<std::size_t> class_of(n, n);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] != n) continue;
        std::size_t id = classes.size();
        std::vector<std::size_t> orbit{i};
        class_of[i] = id;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const Permutation& x = elements_[orbit[head]];
            for (const auto& g : generators_) {
                Permutation y = g.compose(x).compose(g.inverse());
                std::size_t yi = index_of(y);
                if (class_of[yi] == n) {
                    class_of[yi] = id;
                    orbit.push_back(yi);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    std::vector<std::size_t> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
        return classes[a][0] < classes[b][0];
    });
    classes_.class_of_element.assign(n, 0);
    for (std::size_t c = 0; c < perm.size(); ++c) {
        const auto& members = classes[perm[c]];
        classes_.rep_index.push_back(members[0]);
        classes_.class_sizes.push_back(members.size());
        for (auto m : members) classes_.class_of_element[m] = c;
        classes_.class_elements.push_back(members);
        const Permutation& rep = elements_[members[0]];
        std::vector<std::size_t> cent;
        for (std::size_t j = 0; j < n; ++j)
            if (elements_[j].compose(rep) == rep.compose(elements_[j])) cent.push_back(j);
        classes_.centralizer_elements.push_back(std::move(cent));
    }
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
    if (h.degree() != g.degree()) return false;
    if (g.order() % h.order() != 0) return false;
    for (const auto& x : h.elements())
        if (!g.contains(x)) return false;
    return true;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
    if (!is_subgroup(h, g)) throw std::invalid_argument("is_normal: not a subgroup");
    for (const auto& x : h.elements())
        for (const auto& gen : g.generators()) {
            Permutation y = gen.compose(x).compose(gen.inverse());
            if (!h.contains(y)) return false;
        }
    return true;
}

CosetDecomposition left_cosets(const PermGroup& h, const PermGroup& g) {
    if (!is_subgroup(h, g)) throw std::invalid_argument("left_cosets: not a subgroup");
    std::size_t n = g.order();
    CosetDecomposition d;
    d.coset_of_element.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (d.coset_of_element[i] != n) continue;
        std::size_t id = d.rep_indices.size();
        d.rep_indices.push_back(i);
        for (const auto& x : h.elements()) {
            std::size_t m = g.index_of(g.elements()[i].compose(x));
            d.coset_of_element[m] = id;
        }
    }
    return d;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
    if (!g.contains(x)) throw std::invalid_argument("centralizer: element not in group");
    std::vector<Permutation> cent;
    for (const auto& y : g.elements())
        if (y.compose(x) == x.compose(y)) cent.push_back(y);
    return PermGroup(g.degree(), std::move(cent), g.order() + 1);
}

namespace {

PermGroup symmetric(std::size_t n, std::size_t cap) {
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{1, 2}}));
    if (n >= 3) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 1);
        gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return PermGroup(std::max<std::size_t>(n, 1), std::move(gens), cap);
}

PermGroup alternating(std::size_t n, std::size_t cap) {
    std::vector<Permutation> gens;
    if (n >= 3) {
        gens.push_back(Permutation::from_cycles(n, {{1, 2, 3}}));
        if (n > 3) {
            std::vector<int> cyc;
            if (n % 2 == 1) {
                cyc.resize(n);
                std::iota(cyc.begin(), cyc.end(), 1);
            } else {
                cyc.resize(n - 1);
                std::iota(cyc.begin(), cyc.end(), 2);
            }
            gens.push_back(Permutation::from_cycles(n, {cyc}));
        }
    }
    return PermGroup(std::max<std::size_t>(n, 1), std::move(gens), cap);
}

PermGroup cyclic(std::size_t n, std::size_t cap) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<int> cyc(n);
        std::iota(cyc.begin(), cyc.end(), 1);
        gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return PermGroup(std::max<std::size_t>(n, 1), std::move(gens), cap);
}

PermGroup dihedral(std::size_t n, std::size_t cap) {
    // symmetries of the n-gon, order 2n
    if (n < 3) throw std::invalid_argument("dihedral: need n >= 3");
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 1);
    std::vector<std::vector<int>> refl;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        std::size_t a = i, b = n + 1 - i;
        if (a < b) refl.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return PermGroup(n, {Permutation::from_cycles(n, {rot}), Permutation::from_cycles(n, refl)}, cap);
}

PermGroup quaternion8(std::size_t cap) {
    // regular representation on {1..8} = {1,-1,i,-i,j,-j,k,-k}
    Permutation i8 = Permutation::from_cycles(8, {{1, 3, 2, 4}, {5, 7, 6, 8}});
    Permutation j8 = Permutation::from_cycles(8, {{1, 5, 2, 6}, {3, 8, 4, 7}});
    return PermGroup(8, {i8, j8}, cap);
}

}  // namespace

PermGroup named_group(const std::string& name, std::size_t cap) {
    auto arg = [&](const std::string& prefix) -> long {
        if (name.size() <= prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0 ||
            name[prefix.size()] != '(' || name.back() != ')')
            return -1;
        return std::stol(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    };
    if (long n = arg("sym"); n >= 1) return symmetric(static_cast<std::size_t>(n), cap);
    if (long n = arg("alt"); n >= 1) return alternating(static_cast<std::size_t>(n), cap);
    if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A' || name[0] == 'C' || name[0] == 'D') &&
        std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
        long n = std::stol(name.substr(1));
        if (name[0] == 'S' && n >= 3 && n <= 6) return symmetric(static_cast<std::size_t>(n), cap);
        if (name[0] == 'A' && (n == 4 || n == 5)) return alternating(static_cast<std::size_t>(n), cap);
        if (name[0] == 'C' && n >= 2 && n <= 12) return cyclic(static_cast<std::size_t>(n), cap);
        if (name[0] == 'D' && n >= 4 && n <= 8) return dihedral(static_cast<std::size_t>(n), cap);
    }
    if (name == "Q8") return quaternion8(cap);
    throw std::invalid_argument("named_group: unknown group name '" + name + "'");
}

}  // namespace depth
