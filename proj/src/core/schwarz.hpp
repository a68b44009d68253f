#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse.hpp"
#include "csr_matrix.hpp"
#include "operator.hpp"
#include "partition.hpp"

namespace ams {

enum class SchwarzVariant {
    one_level_ras,
    one_level_asm,
    two_level_additive,
    two_level_deflated,
};

bool is_one_level(SchwarzVariant v);
std::string variant_name(SchwarzVariant v);
SchwarzVariant variant_from_name(const std::string& name);

struct HierarchyConfig {
    Index levels = 2;
    std::vector<Index> subdomains = {16};  // one entry per decomposed level
    Real tau = 10.0;
    Index nev_max = 20;  // 0 = unlimited
    PouScheme pou = PouScheme::boolean_owner;
    SchwarzVariant variant = SchwarzVariant::two_level_deflated;
    SchwarzVariant nested_variant = SchwarzVariant::two_level_deflated;
    Index coarse_direct_threshold = 4000;
    Real inner_rtol = 1e-4;
    Index inner_restart = 30;
    Index inner_max_iter = 200;
    std::uint64_t seed = 42;

    void validate() const;
    Index subdomains_at(Index level) const;  // clamps to the last entry
};

/// Construction metadata for reports.
struct LevelInfo {
    Index level = 1;
    Index n = 0;
    Index n_subdomains = 0;
    int k_c = 0;
    Index n_coarse = 0;
    Real grid_complexity = 1.0;
    Index max_interior = 0;
    Index balance_target = 0;  // ceil(1.2 n / N)
    std::string coarse_solve;  // "direct", "nested" or "none"
    std::vector<Index> coarse_per_subdomain;
    std::vector<Real> lambda_max_per_subdomain;
    std::vector<Index> candidates_per_subdomain;
    int pivot_floor_activations = 0;
    Index dropped_coarse_rows = 0;
};

struct HierarchyInfo {
    std::vector<LevelInfo> levels;
    std::vector<std::string> warnings;
};

/// One level of the Schwarz hierarchy acting as a preconditioner for its
/// matrix. Immutable after construction; applies may run concurrently.
class SchwarzPreconditioner final : public Preconditioner {
public:
    Index size() const override { return matrix().n_rows(); }
    bool symmetric() const override;
    void apply(ConstVectorView r, VectorView z) const override {
        apply_logged(r, z, nullptr);
    }
    void apply_logged(ConstVectorView r, VectorView z, InnerSolveLog* log) const override;

    const CsrMatrix& matrix() const { return owned_matrix_ ? *owned_matrix_ : *matrix_; }
    const SubdomainLayout& layout() const { return layout_; }
    const PartitionOfUnity& partition_of_unity() const { return pou_; }
    const Coloring& coloring() const { return coloring_; }
    SchwarzVariant variant() const { return variant_; }
    Index coarse_size() const { return coarse_ ? coarse_->n_coarse : 0; }
    bool has_coarse() const { return coarse_.has_value() && coarse_->n_coarse > 0; }
    const CoarseSpace& coarse() const { return *coarse_; }
    const SchwarzPreconditioner* next_level() const { return next_.get(); }

    friend std::unique_ptr<SchwarzPreconditioner> build_hierarchy(const CsrMatrix& a,
                                                                  const HierarchyConfig& cfg,
                                                                  HierarchyInfo* info);

private:
    SchwarzPreconditioner() = default;

    void apply_local_solves(ConstVectorView r, VectorView z, bool interior_weighted) const;
    void solve_coarse(ConstVectorView rhs, VectorView sol, InnerSolveLog* log) const;

    const CsrMatrix* matrix_ = nullptr;           // level 1 borrows the caller's matrix
    std::unique_ptr<CsrMatrix> owned_matrix_;     // deeper levels own theirs
    SubdomainLayout layout_;
    PartitionOfUnity pou_;
    Coloring coloring_;
    std::vector<DenseCholesky> local_factors_;    // per-subdomain Cholesky of A(overlap, overlap)
    SchwarzVariant variant_ = SchwarzVariant::two_level_deflated;
    std::optional<CoarseSpace> coarse_;
    std::unique_ptr<SchwarzPreconditioner> next_;  // nested coarse preconditioner
    Real inner_rtol_ = 1e-4;
    Index inner_restart_ = 30;
    Index inner_max_iter_ = 200;
};

/// Builds the multilevel hierarchy: decompose, factor subdomain blocks, build
/// the coarse space, then either factor the coarse operator directly or
/// recurse on it as a fresh sparse SPD matrix.
std::unique_ptr<SchwarzPreconditioner> build_hierarchy(const CsrMatrix& a,
                                                       const HierarchyConfig& cfg,
                                                       HierarchyInfo* info = nullptr);

}  // namespace ams
