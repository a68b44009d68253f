#pragma once

#include <vector>

#include "csr_matrix.hpp"
#include "lapack.hpp"
#include "types.hpp"

namespace ams {

class LinearOperator {
public:
    virtual ~LinearOperator() = default;
    virtual Index size() const = 0;
    virtual void apply(ConstVectorView x, VectorView y) const = 0;

    std::vector<Real> apply(ConstVectorView x) const {
        std::vector<Real> y(static_cast<std::size_t>(size()), 0.0);
        apply(x, VectorView(y));
        return y;
    }
};

class CsrOperator final : public LinearOperator {
public:
    explicit CsrOperator(const CsrMatrix& a) : a_(&a) {}
    Index size() const override { return a_->n_rows(); }
    void apply(ConstVectorView x, VectorView y) const override { a_->multiply(x, y); }
    const CsrMatrix& matrix() const { return *a_; }

private:
    const CsrMatrix* a_;
};

/// Iteration counts of nested coarse solves, appended per inner solve.
struct InnerSolveLog {
    std::vector<Index> iterations;
};

class Preconditioner : public LinearOperator {
public:
    /// Whether the preconditioner is a symmetric operator (required by PCG
    /// and by condition-number estimation).
    virtual bool symmetric() const = 0;

    /// Apply that records nested inner-solve iteration counts; the default
    /// forwards to the plain apply.
    virtual void apply_logged(ConstVectorView r, VectorView z, InnerSolveLog* log) const {
        (void)log;
        apply(r, z);
    }
};

class IdentityPreconditioner final : public Preconditioner {
public:
    explicit IdentityPreconditioner(Index n) : n_(n) {}
    Index size() const override { return n_; }
    bool symmetric() const override { return true; }
    void apply(ConstVectorView x, VectorView y) const override {
        std::copy(x.begin(), x.end(), y.begin());
    }

private:
    Index n_;
};

}  // namespace ams
