#include "lieposet/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lieposet {

std::string to_string(const BasisElement& e) {
  return "E_{" + std::to_string(e.row) + "," + std::to_string(e.col) + "}";
}

LinearForm LinearForm::unit(BasisElement e, long long coeff) {
  LinearForm f;
  f.add(e, coeff);
  return f;
}

void LinearForm::add(BasisElement e, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

LinearForm LinearForm::operator-() const {
  LinearForm f;
  for (auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
  LinearForm f = *this;
  for (auto& [e, c] : other.terms_) f.add(e, c);
  return f;
}

std::string to_string(const LinearForm& form) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : form.terms()) {
    if (c < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    long long mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += to_string(e);
    first = false;
  }
  return out;
}

SymbolicMatrix::SymbolicMatrix(std::vector<BasisElement> labels)
    : labels_(std::move(labels)),
      entries_(labels_.size(), std::vector<LinearForm>(labels_.size())) {}

int SymbolicMatrix::label_index(const BasisElement& e) const {
  auto it = std::find(labels_.begin(), labels_.end(), e);
  return it == labels_.end() ? -1
                             : static_cast<int>(it - labels_.begin());
}

const LinearForm& SymbolicMatrix::entry_of(const BasisElement& row,
                                           const BasisElement& col) const {
  int i = label_index(row), j = label_index(col);
  if (i < 0 || j < 0) throw OutOfRange("label not present in matrix");
  return entries_[i][j];
}

bool SymbolicMatrix::is_skew_symmetric() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j <= i; ++j)
      if (!(entries_[i][j] + entries_[j][i]).is_zero()) return false;
  return true;
}

bool in_basis(const Poset& poset, Variant variant, const BasisElement& e) {
  if (e.row < 1 || e.row > poset.size() || e.col < 1 || e.col > poset.size())
    return false;
  return variant == Variant::nilpotent ? poset.less(e.row, e.col)
                                       : poset.leq(e.row, e.col);
}

std::vector<BasisElement> nilpotent_basis(const Poset& poset,
                                          LabelOrder order) {
  std::vector<BasisElement> basis;
  for (auto [i, j] : poset.relations()) basis.push_back({i, j});
  if (order == LabelOrder::lex) return basis;

  // Blocked row order from the height-two block decomposition: B_p blocks by
  // p ascending, then B^p blocks, then extremal-to-extremal pairs; anything
  // left (possible above height two) trails in lex order.
  std::vector<BasisElement> blocked, rest;
  for (int p = 1; p <= poset.size(); ++p)
    if (!is_extremal(poset, p))
      for (auto e : basis)
        if (e.col == p && is_minimal(poset, e.row)) blocked.push_back(e);
  for (int p = 1; p <= poset.size(); ++p)
    if (!is_extremal(poset, p))
      for (auto e : basis)
        if (e.row == p && is_maximal(poset, e.col)) blocked.push_back(e);
  for (auto e : basis)
    if (is_extremal(poset, e.row) && is_extremal(poset, e.col))
      blocked.push_back(e);
  for (auto e : basis)
    if (std::find(blocked.begin(), blocked.end(), e) == blocked.end())
      rest.push_back(e);
  blocked.insert(blocked.end(), rest.begin(), rest.end());
  return blocked;
}

std::vector<BasisElement> blocked_column_order(const Poset& poset) {
  std::vector<BasisElement> basis = nilpotent_basis(poset);
  std::vector<BasisElement> blocked, rest;
  for (int p = 1; p <= poset.size(); ++p)
    if (!is_extremal(poset, p))
      for (auto e : basis)
        if (e.row == p && is_maximal(poset, e.col)) blocked.push_back(e);
  for (int p = 1; p <= poset.size(); ++p)
    if (!is_extremal(poset, p))
      for (auto e : basis)
        if (e.col == p && is_minimal(poset, e.row)) blocked.push_back(e);
  for (auto e : basis)
    if (is_extremal(poset, e.row) && is_extremal(poset, e.col))
      blocked.push_back(e);
  for (auto e : basis)
    if (std::find(blocked.begin(), blocked.end(), e) == blocked.end())
      rest.push_back(e);
  blocked.insert(blocked.end(), rest.begin(), rest.end());
  return blocked;
}

std::vector<BasisElement> solvable_basis(const Poset& poset) {
  std::vector<BasisElement> basis;
  for (int p = 1; p <= poset.size(); ++p) {
    basis.push_back({p, p});
    for (int q = p + 1; q <= poset.size(); ++q)
      if (poset.less(p, q)) basis.push_back({p, q});
  }
  return basis;
}

LinearForm bracket(const Poset& poset, Variant variant, const BasisElement& a,
                   const BasisElement& b) {
  LinearForm f;
  if (a.col == b.row) {
    BasisElement e{a.row, b.col};
    if (in_basis(poset, variant, e)) f.add(e, 1);
  }
  if (b.col == a.row) {
    BasisElement e{b.row, a.col};
    if (in_basis(poset, variant, e)) f.add(e, -1);
  }
  return f;
}

SymbolicMatrix commutator_matrix(const Poset& poset, Variant variant,
                                 LabelOrder order) {
  std::vector<BasisElement> labels = variant == Variant::nilpotent
                                         ? nilpotent_basis(poset, order)
                                         : solvable_basis(poset);
  SymbolicMatrix m(std::move(labels));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      m.entry(i, j) = bracket(poset, variant, m.labels()[i], m.labels()[j]);
  return m;
}

std::string render(const SymbolicMatrix& m,
                   const std::vector<BasisElement>& row_labels,
                   const std::vector<BasisElement>& col_labels,
                   bool drop_zero_lines) {
  auto line_is_zero = [&](const BasisElement& label) {
    int i = m.label_index(label);
    for (int j = 0; j < m.dim(); ++j)
      if (!m.entry(i, j).is_zero() || !m.entry(j, i).is_zero()) return false;
    return true;
  };
  std::vector<BasisElement> rows, cols;
  for (auto& e : row_labels)
    if (!drop_zero_lines || !line_is_zero(e)) rows.push_back(e);
  for (auto& e : col_labels)
    if (!drop_zero_lines || !line_is_zero(e)) cols.push_back(e);

  std::vector<std::vector<std::string>> cells(rows.size() + 1);
  cells[0].push_back("");
  for (auto& c : cols) cells[0].push_back(to_string(c));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    cells[r + 1].push_back(to_string(rows[r]));
    for (auto& c : cols)
      cells[r + 1].push_back(to_string(m.entry_of(rows[r], c)));
  }
  std::vector<std::size_t> width(cols.size() + 1, 0);
  for (auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k)
      width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  for (auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << std::string(width[k] - row[k].size(), ' ') << row[k];
      out << (k + 1 == row.size() ? "\n" : "  ");
    }
  }
  return out.str();
}

std::string render(const SymbolicMatrix& m, bool drop_zero_lines) {
  return render(m, m.labels(), m.labels(), drop_zero_lines);
}

std::string matrix_to_json(const SymbolicMatrix& m) {
  nlohmann::json j;
  j["labels"] = nlohmann::json::array();
  for (auto& e : m.labels()) j["labels"].push_back({e.row, e.col});
  j["entries"] = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.dim(); ++k) {
      nlohmann::json cell = nlohmann::json::array();
      for (auto& [e, c] : m.entry(i, k).terms())
        cell.push_back({c, e.row, e.col});
      row.push_back(cell);
    }
    j["entries"].push_back(row);
  }
  return j.dump();
}

SymbolicMatrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  std::vector<BasisElement> labels;
  for (auto& pair : j.at("labels"))
    labels.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  SymbolicMatrix m(labels);
  auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != m.dim())
    throw ParseError("matrix entries/labels size mismatch");
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.dim())
      throw ParseError("matrix row " + std::to_string(i) + " size mismatch");
    for (int k = 0; k < m.dim(); ++k)
      for (auto& term : rows[i][k])
        m.entry(i, k).add({term.at(1).get<int>(), term.at(2).get<int>()},
                          term.at(0).get<long long>());
  }
  return m;
}

}  // namespace lieposet
