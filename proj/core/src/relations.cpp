#include "termcheck/relations.hpp"

namespace termcheck {

char relation_char(Relation r) {
  switch (r) {
    case Relation::Less: return '<';
    case Relation::Equal: return '=';
    case Relation::Unknown: return '?';
  }
  return '?';
}

std::optional<Relation> relation_from_char(char c) {
  switch (c) {
    case '<': return Relation::Less;
    case '=': return Relation::Equal;
    case '?': return Relation::Unknown;
    default: return std::nullopt;
  }
}

std::string render_relations(const RelVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += relation_char(v[i]);
  }
  return out;
}

CallMatrix::CallMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, Relation::Unknown) {}

CallMatrix::CallMatrix(std::size_t rows, std::size_t cols, std::vector<Relation> row_major)
    : rows_(rows), cols_(cols), cells_(std::move(row_major)) {
  if (cells_.size() != rows_ * cols_)
    throw InvalidCallMatrix("call matrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                            std::to_string(cells_.size()));
  for (std::size_t r = 0; r < rows_; ++r) {
    int known = 0;
    for (std::size_t c = 0; c < cols_; ++c) known += at(r, c) != Relation::Unknown;
    if (known > 1)
      throw InvalidCallMatrix("call matrix: row " + std::to_string(r) + " has " + std::to_string(known) +
                              " known entries");
  }
}

CallMatrix CallMatrix::from_rows(const std::vector<RelVector>& rows, std::size_t cols) {
  std::vector<Relation> cells;
  cells.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw InvalidCallMatrix("call matrix: ragged rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return CallMatrix(rows.size(), cols, std::move(cells));
}

CallMatrix CallMatrix::parse(const std::string& text) {
  std::vector<RelVector> rows;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '[') throw InvalidCallMatrix("call matrix: expected '[' in \"" + text + "\"");
    ++i;
    RelVector row;
    while (i < text.size() && text[i] != ']') {
      auto r = relation_from_char(text[i]);
      if (!r) throw InvalidCallMatrix("call matrix: bad relation '" + std::string(1, text[i]) + "'");
      row.push_back(*r);
      ++i;
    }
    if (i == text.size()) throw InvalidCallMatrix("call matrix: missing ']' in \"" + text + "\"");
    ++i;
    rows.push_back(std::move(row));
  }
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(rows, cols);
}

CallMatrix CallMatrix::identity(std::size_t n) {
  CallMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cells_[i * n + i] = Relation::Equal;
  return m;
}

RelVector CallMatrix::row(std::size_t r) const {
  return RelVector(cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::optional<std::size_t> CallMatrix::known_column(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (at(r, c) != Relation::Unknown) return c;
  return std::nullopt;
}

bool CallMatrix::well_formed() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    int known = 0;
    for (std::size_t c = 0; c < cols_; ++c) known += at(r, c) != Relation::Unknown;
    if (known > 1) return false;
  }
  return true;
}

std::string CallMatrix::compact() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) out += relation_char(at(r, c));
    out += ']';
  }
  return out;
}

CallMatrix matrix_multiply(const CallMatrix& a, const CallMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix_multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<Relation> cells(a.rows() * b.cols(), Relation::Unknown);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Relation sum = Relation::Unknown;
      for (std::size_t k = 0; k < a.cols(); ++k) sum = rel_plus(sum, rel_times(a.at(i, k), b.at(k, j)));
      cells[i * b.cols() + j] = sum;
    }
  }
  return CallMatrix(a.rows(), b.cols(), std::move(cells));
}

RelVector diagonal(const CallMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("diagonal of non-square " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " matrix");
  RelVector d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m.at(i, i);
  return d;
}

}  // namespace termcheck
