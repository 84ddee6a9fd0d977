#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mfc {

using StudentId = int;  // 1-based, contiguous within an instance
using TopicId = int;    // 1-based

struct Student {
  StudentId id = 0;
  int category = 0;               // binary protected attribute, 0 or 1
  std::int64_t registration = 0;  // registration rank; strict total order after ingestion
  std::string name;
};

// Group cardinality bounds [lower, upper].
struct Bounds {
  int lower = 0;
  int upper = 0;
  bool valid() const { return lower >= 0 && lower <= upper; }
};

// n x h topic indices; column position encodes preference rank (1 = most preferred).
class WishMatrix {
 public:
  WishMatrix() = default;
  WishMatrix(std::size_t students, std::size_t ranks)
      : n_(students), h_(ranks), data_(students * ranks, 0) {}

  std::size_t students() const { return n_; }
  std::size_t ranks() const { return h_; }

  TopicId& at(StudentId student, int rank) { return data_[index(student, rank)]; }
  TopicId at(StudentId student, int rank) const { return data_[index(student, rank)]; }

  std::span<const TopicId> row(StudentId student) const {
    return {data_.data() + (static_cast<std::size_t>(student) - 1) * h_, h_};
  }

  bool wishes(StudentId student, TopicId topic) const { return rank_of(student, topic) != 0; }

  // 1-based preference rank of `topic` in the student's row, 0 if absent.
  int rank_of(StudentId student, TopicId topic) const {
    const auto r = row(student);
    for (std::size_t p = 0; p < r.size(); ++p) {
      if (r[p] == topic) return static_cast<int>(p) + 1;
    }
    return 0;
  }

 private:
  std::size_t index(StudentId student, int rank) const {
    return (static_cast<std::size_t>(student) - 1) * h_ +
           (static_cast<std::size_t>(rank) - 1);
  }

  std::size_t n_ = 0, h_ = 0;
  std::vector<TopicId> data_;
};

// Dense n x m matrix addressed by (student id, topic id), both 1-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& at(StudentId student, TopicId topic) { return data_[index(student, topic)]; }
  double at(StudentId student, TopicId topic) const { return data_[index(student, topic)]; }

 private:
  std::size_t index(StudentId student, TopicId topic) const {
    return (static_cast<std::size_t>(student) - 1) * cols_ +
           (static_cast<std::size_t>(topic) - 1);
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

// Aggregated per-(student, topic) welfare: alpha * interest + beta * priority.
struct WelfareMatrix {
  Matrix values;
  double alpha = 1.0;
  double beta = 1.0;
};

// Topic-labeled groups; values are member ids in assignment order.
// Groups are pairwise disjoint and each topic key appears at most once
// (guaranteed by the map). Members may be assigned outside their wish list;
// such assignments contribute zero welfare.
using Grouping = std::map<TopicId, std::vector<StudentId>>;

struct Instance {
  std::vector<Student> students;  // sorted by id; ids are 1..n
  int topic_count = 0;            // m
  WishMatrix wishes;              // n x h
  Matrix interest;                // V: h/p at the p-th wish, 0 elsewhere
  Matrix priority;                // W: positive for wished topics, 0 elsewhere
  Bounds bounds;                  // {0, n} means unconstrained
  double alpha = 1.0;
  double beta = 1.0;
  // True when the priority order derives from actual registration data; the
  // W-vs-registration consistency check only applies in that case (generated
  // instances carry independent per-topic priority orders).
  bool has_registration_times = false;
  std::array<std::string, 2> category_labels{{"0", "1"}};

  int size() const { return static_cast<int>(students.size()); }
  int wish_count() const { return static_cast<int>(wishes.ranks()); }
  const Student& student(StudentId id) const {
    return students[static_cast<std::size_t>(id) - 1];
  }
};

// Canonical one-line-per-group text form, used for byte-equality checks.
std::string serialize_grouping(const Grouping& grouping);

// Ids assigned anywhere in the grouping, ascending.
std::vector<StudentId> assigned_students(const Grouping& grouping);

}  // namespace mfc
