#pragma once

#include <cstdint>
#include <span>

#include "mfc/types.hpp"

namespace mfc {

// Interest matrix V: the p-th wished topic of a student gets value h/p,
// every other entry is zero.
Matrix build_interest_matrix(const WishMatrix& wishes, int wish_count, int topic_count);

// Priority matrix W from per-student registration keys (indexed by id - 1).
// For a topic with c choosers, the chooser at ascending-registration rank q
// (1-based) gets (c - q + 1) / c; non-choosers get zero. The scheme is
// strictly decreasing in rank and normalized to (0, 1]. Throws IngestError
// on a registration tie between two choosers of the same topic.
Matrix build_priority_matrix(const WishMatrix& wishes,
                             std::span<const std::int64_t> registration,
                             int topic_count);

// Entrywise alpha * V + beta * W. Throws on shape mismatch.
WelfareMatrix build_welfare(const Matrix& interest, const Matrix& priority,
                            double alpha, double beta);

// Welfare for the instance's own V, W, alpha, beta.
WelfareMatrix build_welfare(const Instance& instance);

}  // namespace mfc
