#include "mfc/welfare.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

Matrix build_interest_matrix(const WishMatrix& wishes, int wish_count, int topic_count) {
  const int n = static_cast<int>(wishes.students());
  if (static_cast<int>(wishes.ranks()) != wish_count) {
    throw IngestError("wish matrix has " + std::to_string(wishes.ranks()) +
                      " columns, expected " + std::to_string(wish_count));
  }
  Matrix interest(static_cast<std::size_t>(n), static_cast<std::size_t>(topic_count));
  for (StudentId id = 1; id <= n; ++id) {
    const auto row = wishes.row(id);
    for (int p = 1; p <= wish_count; ++p) {
      const TopicId topic = row[static_cast<std::size_t>(p) - 1];
      if (topic < 1 || topic > topic_count) {
        throw IngestError("invalid topic index " + std::to_string(topic) +
                          " in wish row of student " + std::to_string(id));
      }
      interest.at(id, topic) = static_cast<double>(wish_count) / p;
    }
  }
  return interest;
}

Matrix build_priority_matrix(const WishMatrix& wishes,
                             std::span<const std::int64_t> registration,
                             int topic_count) {
  const int n = static_cast<int>(wishes.students());
  if (static_cast<int>(registration.size()) != n) {
    throw IngestError("registration keys do not cover every student");
  }
  Matrix priority(static_cast<std::size_t>(n), static_cast<std::size_t>(topic_count));
  std::vector<StudentId> choosers;
  for (TopicId j = 1; j <= topic_count; ++j) {
    choosers.clear();
    for (StudentId id = 1; id <= n; ++id) {
      if (wishes.wishes(id, j)) choosers.push_back(id);
    }
    std::sort(choosers.begin(), choosers.end(), [&](StudentId a, StudentId b) {
      return registration[static_cast<std::size_t>(a) - 1] <
             registration[static_cast<std::size_t>(b) - 1];
    });
    const auto c = static_cast<double>(choosers.size());
    for (std::size_t q = 1; q <= choosers.size(); ++q) {
      if (q > 1 && registration[static_cast<std::size_t>(choosers[q - 1]) - 1] ==
                       registration[static_cast<std::size_t>(choosers[q - 2]) - 1]) {
        throw IngestError("registration tie in topic " + std::to_string(j) +
                          " between students " + std::to_string(choosers[q - 2]) + " and " +
                          std::to_string(choosers[q - 1]));
      }
      priority.at(choosers[q - 1], j) = (c - static_cast<double>(q) + 1.0) / c;
    }
  }
  return priority;
}

WelfareMatrix build_welfare(const Matrix& interest, const Matrix& priority,
                            double alpha, double beta) {
  if (interest.rows() != priority.rows() || interest.cols() != priority.cols()) {
    throw std::invalid_argument("interest and priority matrices differ in shape");
  }
  if (alpha < 0.0 || beta < 0.0) {
    throw std::invalid_argument("welfare weights must be non-negative");
  }
  WelfareMatrix welfare;
  welfare.alpha = alpha;
  welfare.beta = beta;
  welfare.values = Matrix(interest.rows(), interest.cols());
  for (StudentId i = 1; i <= static_cast<int>(interest.rows()); ++i) {
    for (TopicId j = 1; j <= static_cast<int>(interest.cols()); ++j) {
      welfare.values.at(i, j) = alpha * interest.at(i, j) + beta * priority.at(i, j);
    }
  }
  return welfare;
}

WelfareMatrix build_welfare(const Instance& instance) {
  return build_welfare(instance.interest, instance.priority, instance.alpha, instance.beta);
}

}  // namespace mfc
