#ifndef DEPTH_PIPELINES_HPP
#define DEPTH_PIPELINES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "depth/chartable.hpp"
#include "depth/depth_matrix.hpp"
#include "depth/green.hpp"
#include "depth/hopf.hpp"
#include "depth/tensor_lab.hpp"

namespace depth {

// add-a-box branching between partitions of n and n+1 (entry 1 per edge)
IntMatrix young_branching_matrix(std::size_t n);
std::vector<std::vector<int>> partitions_of(std::size_t n);

/// Multiplicity matrix of an algebra X as a kG-kG-bimodule, from the exact
/// two-sided trace character decomposed against Irr(G)×Irr(G).
IntMatrix bimodule_mult_matrix(const AlgData& x, const CharacterTable& table,
                               const SubalgebraEmbedding& kg_in_x);

// same, for a bimodule given by commuting per-group-element action matrices
IntMatrix bimodule_mult_matrix_ops(const CharacterTable& table,
                                   const std::vector<RatMatrix>& left_of_element,
                                   const std::vector<RatMatrix>& right_of_element);

long odd_depth_via_bimodules(const IntMatrix& t);

/// Centralizer-pairs matrix of D(kG): one row per (conjugacy class c, irreducible
/// of the centralizer of its representative), columns Irr(G); the row is the
/// decomposition of the induced centralizer character.
struct DrinfeldInductionData {
    IntMatrix m;
    std::vector<std::pair<std::size_t, std::size_t>> row_labels;  // (class, centralizer irr)
    DrinfeldInductionData() : m(1, 1) {}
};

DrinfeldInductionData drinfeld_induction_matrix(const PermGroup& g,
                                                std::optional<unsigned long> prime_override = {});

/// Exact Wedderburn data of a split semisimple ℚ-algebra: central primitive
/// idempotents and matrix-block degrees. nullopt when the center does not split
/// rationally (or the input is not split semisimple).
struct SplitSemisimpleData {
    std::vector<RatVec> idempotents;
    std::vector<std::size_t> degrees;
};

std::optional<SplitSemisimpleData> split_semisimple(const AlgData& x);

struct ClaimVerdict {
    std::string id;
    std::string instance;
    std::string lhs;
    std::string rhs;
    std::string paper_value;
    bool pass = false;
};

struct NamedCheck {
    std::string name;
    bool pass = false;
};

struct DepthReport {
    std::string scenario;
    std::optional<DepthQuad> quad;
    std::optional<long> d_odd;  // always present when any depth was computed
    std::vector<ClaimVerdict> claims;
    std::vector<NamedCheck> checks;
    std::map<std::string, IntMatrix> matrices;
    std::map<std::string, std::string> info;

    bool all_checks_pass() const;
};

struct PipelineConfig {
    std::size_t group_order_cap = PermGroup::kDefaultOrderCap;
    std::size_t tensor_budget = kDefaultTensorBudget;
    std::optional<unsigned long> prime_override;
    bool include_small_matrices = true;  // embed matrices up to 64x64 in reports
};

DepthReport scenario_sym_pair(std::size_t n, const PipelineConfig& cfg = {});
DepthReport scenario_group_pair(const PermGroup& g, const PermGroup& h, const std::string& label,
                                const PipelineConfig& cfg = {});
DepthReport scenario_heisenberg(const PermGroup& g, const std::string& label,
                                const PipelineConfig& cfg = {});
DepthReport scenario_drinfeld(const PermGroup& g, const std::string& label,
                              const PipelineConfig& cfg = {});
DepthReport scenario_gen_smash(const PermGroup& g, const PermGroup& h, const std::string& label,
                               const PipelineConfig& cfg = {});
DepthReport scenario_matrix(const IntMatrix& m, const PipelineConfig& cfg = {});

/// Named battery pairs used throughout: C2<=S3, A3<|S3, S3<=S4, C3<=S3, V4<|A4, C2<=D4.
struct GroupPairSpec {
    std::string label;
    PermGroup g, h;
};
std::vector<GroupPairSpec> default_pair_battery(std::size_t order_cap = PermGroup::kDefaultOrderCap);

// the default audit battery: C1..C8 with per-instance verdicts
std::vector<DepthReport> claims_audit_default(const PipelineConfig& cfg = {});

}  // namespace depth

#endif
