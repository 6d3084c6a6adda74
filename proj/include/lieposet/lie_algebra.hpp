#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lieposet/poset.hpp"

namespace lieposet {

enum class Variant { nilpotent, solvable };

// Matrix unit E_{row,col}; row < col in the nilpotent algebra, row <= col in
// the solvable one.
struct BasisElement {
  int row = 0;
  int col = 0;
  auto operator<=>(const BasisElement&) const = default;
};

std::string to_string(const BasisElement& e);

// Integer linear combination of basis elements; the zero form stores nothing.
class LinearForm {
 public:
  LinearForm() = default;
  static LinearForm unit(BasisElement e, long long coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisElement, long long>& terms() const { return terms_; }

  void add(BasisElement e, long long coeff);
  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& other) const;

  bool operator==(const LinearForm&) const = default;

 private:
  std::map<BasisElement, long long> terms_;
};

std::string to_string(const LinearForm& form);

// Square matrix of linear forms with one label list shared by rows and
// columns; commutator matrices are skew-symmetric with zero diagonal.
class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  explicit SymbolicMatrix(std::vector<BasisElement> labels);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<BasisElement>& labels() const { return labels_; }

  const LinearForm& entry(int i, int j) const { return entries_[i][j]; }
  LinearForm& entry(int i, int j) { return entries_[i][j]; }

  int label_index(const BasisElement& e) const;  // -1 if absent
  const LinearForm& entry_of(const BasisElement& row,
                             const BasisElement& col) const;

  bool is_skew_symmetric() const;

 private:
  std::vector<BasisElement> labels_;
  std::vector<std::vector<LinearForm>> entries_;
};

enum class LabelOrder {
  lex,      // lexicographic on (row, col)
  blocked,  // B_p blocks, then B^p blocks, then extremal pairs, then the rest
};

bool in_basis(const Poset& poset, Variant variant, const BasisElement& e);

// One element per strict relation.
std::vector<BasisElement> nilpotent_basis(const Poset& poset,
                                          LabelOrder order = LabelOrder::lex);

// Column-side blocked order: B^p blocks first, then B_p blocks, then
// extremal pairs. Pairs with the blocked row order to expose the
// block-diagonal shape on height-two posets.
std::vector<BasisElement> blocked_column_order(const Poset& poset);

// Nilpotent basis plus every diagonal E_{p,p}, lexicographic.
std::vector<BasisElement> solvable_basis(const Poset& poset);

// [E_{a,b}, E_{c,d}] via the delta rule; terms outside the variant's basis
// are dropped.
LinearForm bracket(const Poset& poset, Variant variant, const BasisElement& a,
                   const BasisElement& b);

SymbolicMatrix commutator_matrix(const Poset& poset, Variant variant,
                                 LabelOrder order = LabelOrder::lex);

// Bordered pretty-printer with independent row/column label sequences (both
// must index into the matrix's label set).
std::string render(const SymbolicMatrix& m,
                   const std::vector<BasisElement>& row_labels,
                   const std::vector<BasisElement>& col_labels,
                   bool drop_zero_lines = false);
std::string render(const SymbolicMatrix& m, bool drop_zero_lines = false);

std::string matrix_to_json(const SymbolicMatrix& m);
SymbolicMatrix matrix_from_json(const std::string& text);

}  // namespace lieposet
