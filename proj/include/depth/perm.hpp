#ifndef DEPTH_PERM_HPP
#define DEPTH_PERM_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace depth {

/// Permutation of {1..n}; 1-indexed in files and cycle notation, 0-indexed internally.
class Permutation {
public:
    explicit Permutation(std::size_t degree);          // identity
    explicit Permutation(std::vector<int> images);     // 0-indexed image array
    // cycles use 1-indexed points, e.g. {{1,2},{3,4,5}}
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

    std::size_t degree() const { return img_.size(); }
    int apply(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& o) const;   // (p∘o)(x) = p(o(x))
    Permutation inverse() const;
    bool is_identity() const;
    int order() const;
    std::vector<std::vector<int>> cycles() const;      // nontrivial cycles, 1-indexed, sorted

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

std::string cycle_string(const Permutation& p);

/// Conjugacy classes of an enumerated group, sorted by size then by
/// lexicographically minimal representative.
struct ConjClassData {
    std::vector<std::size_t> rep_index;                      // per class, into elements()
    std::vector<std::size_t> class_sizes;
    std::vector<std::size_t> class_of_element;               // per element index
    std::vector<std::vector<std::size_t>> class_elements;    // element indices per class
    std::vector<std::vector<std::size_t>> centralizer_elements;  // per class rep

    std::size_t count() const { return rep_index.size(); }
};

/// Finite permutation group from generators, fully enumerated by closure.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators,
              std::size_t order_cap = kDefaultOrderCap);

    static constexpr std::size_t kDefaultOrderCap = 5000;

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const;
    std::size_t index_of(const Permutation& p) const;  // throws when absent
    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inv(std::size_t i) const;
    std::size_t identity_index() const { return identity_; }
    std::size_t element_order(std::size_t i) const { return static_cast<std::size_t>(elements_[i].order()); }
    std::size_t exponent() const;   // lcm of element orders

    const ConjClassData& conjugacy_classes() const { return classes_; }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;   // sorted lexicographically
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t identity_ = 0;
    ConjClassData classes_;

    void enumerate(std::size_t cap);
    void compute_classes();
};

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool is_normal(const PermGroup& h, const PermGroup& g);

/// Left cosets gH partitioning G.
struct CosetDecomposition {
    std::vector<std::size_t> rep_indices;        // per coset, element index in G
    std::vector<std::size_t> coset_of_element;   // per element index in G
    std::size_t count() const { return rep_indices.size(); }
};
CosetDecomposition left_cosets(const PermGroup& h, const PermGroup& g);

PermGroup centralizer(const PermGroup& g, const Permutation& x);

// Named built-ins: "S3".."S6", "A4", "A5", "C2".."C12", "D4".."D8", "Q8",
// "sym(n)", "alt(n)".
PermGroup named_group(const std::string& name, std::size_t order_cap = PermGroup::kDefaultOrderCap);

}  // namespace depth

#endif
