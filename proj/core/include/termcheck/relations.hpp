#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace termcheck {

// Three-valued size relation between a call argument and a caller parameter.
// Unknown is the additive zero, Equal the multiplicative one.
enum class Relation : unsigned char { Less, Equal, Unknown };

inline constexpr Relation kAllRelations[] = {Relation::Less, Relation::Equal, Relation::Unknown};

// Parallel combination: the stronger piece of information wins.
constexpr Relation rel_plus(Relation a, Relation b) {
  if (a == Relation::Less || b == Relation::Less) return Relation::Less;
  if (a == Relation::Equal || b == Relation::Equal) return Relation::Equal;
  return Relation::Unknown;
}

// Serial combination: Unknown destroys information, Less survives Equal.
constexpr Relation rel_times(Relation a, Relation b) {
  if (a == Relation::Unknown || b == Relation::Unknown) return Relation::Unknown;
  if (a == Relation::Less || b == Relation::Less) return Relation::Less;
  return Relation::Equal;
}

char relation_char(Relation r);
std::optional<Relation> relation_from_char(char c);

using RelVector = std::vector<Relation>;

// "< = ?" style, space separated.
std::string render_relations(const RelVector& v);

class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidCallMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix over Relation with at most one non-Unknown entry per row.
// Rows are the callee's arguments, columns the caller's parameters.
class CallMatrix {
 public:
  CallMatrix() = default;

  // All-Unknown matrix.
  CallMatrix(std::size_t rows, std::size_t cols);

  // Throws InvalidCallMatrix on ragged input or a row with two known entries.
  CallMatrix(std::size_t rows, std::size_t cols, std::vector<Relation> row_major);
  static CallMatrix from_rows(const std::vector<RelVector>& rows, std::size_t cols);

  // Parses "[<?][?=]"; an empty string gives a 0x0 matrix.
  static CallMatrix parse(const std::string& text);

  static CallMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Relation at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  RelVector row(std::size_t r) const;

  // Column index of the single known entry in row r, if any.
  std::optional<std::size_t> known_column(std::size_t r) const;

  // True when every row has at most one known entry.
  bool well_formed() const;

  // Rendered row-major as "[<?][?=]".
  std::string compact() const;

  friend auto operator<=>(const CallMatrix&, const CallMatrix&) = default;
  friend bool operator==(const CallMatrix&, const CallMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Relation> cells_;
};

// Product under (rel_plus, rel_times). a is n x m, b is m x l.
CallMatrix matrix_multiply(const CallMatrix& a, const CallMatrix& b);

// Diagonal of a square matrix.
RelVector diagonal(const CallMatrix& m);

}  // namespace termcheck
