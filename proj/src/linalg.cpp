#include "dkh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "dkh/error.hpp"

namespace dkh {

void SparseMatrix::canonicalize() {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> out;
  for (const Triplet& t : entries) {
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
      out.back().value += t.value;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Triplet& t) { return t.value == 0; }),
            out.end());
  entries = std::move(out);
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InternalError("dimension mismatch in multiply");
  std::vector<std::vector<std::pair<std::uint32_t, long>>> a_cols(a.cols);
  for (const Triplet& t : a.entries) a_cols[t.col].emplace_back(t.row, t.value);
  SparseMatrix c;
  c.rows = a.rows;
  c.cols = b.cols;
  for (const Triplet& t : b.entries)
    for (auto [r, v] : a_cols[t.row]) c.entries.push_back({r, t.col, v * t.value});
  c.canonicalize();
  return c;
}

namespace {

using Row = std::vector<std::pair<std::uint32_t, mpz_class>>;

const mpz_class* find_entry(const Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

void erase_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it != v.end() && *it == x) v.erase(it);
}

void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

SmithForm smith_normal_form_dense(std::vector<std::vector<mpz_class>> a) {
  SmithForm out;
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < n && t < m) {
    std::size_t bi = n, bj = m;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < m; ++j)
        if (a[i][j] != 0 && (bi == n || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == n) break;
    std::swap(a[t], a[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[i], a[t]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < n && !fixed; ++i)
        for (std::size_t j = t + 1; j < m && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < m; ++k) a[t][k] += a[i][k];
            fixed = true;
          }
      if (!fixed) break;
    }
    out.factors.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

SmithForm smith_normal_form(const SparseMatrix& input) {
  SparseMatrix m = input;
  m.canonicalize();
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (const Triplet& t : m.entries) rows[t.row].emplace_back(t.col, mpz_class(t.value));
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& e : rows[r]) col_rows[e.first].push_back(r);
  for (auto& c : col_rows) std::sort(c.begin(), c.end());

  std::size_t unit_pivots = 0;
  for (;;) {
    std::ptrdiff_t best_r = -1, best_c = -1;
    std::size_t best_cost = SIZE_MAX;
    for (std::uint32_t c = 0; c < col_rows.size(); ++c) {
      const auto& cr = col_rows[c];
      if (cr.empty() || (cr.size() - 1) * 1 >= best_cost) continue;
      for (std::uint32_t r : cr) {
        const mpz_class* v = find_entry(rows[r], c);
        if (!v || abs(*v) != 1) continue;
        std::size_t cost = (cr.size() - 1) * (rows[r].size());
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_r < 0) break;
    const auto pr = static_cast<std::uint32_t>(best_r);
    const auto pc = static_cast<std::uint32_t>(best_c);
    const mpz_class p = *find_entry(rows[pr], pc);
    std::vector<std::uint32_t> targets = col_rows[pc];
    for (std::uint32_t r2 : targets) {
      if (r2 == pr) continue;
      mpz_class f = *find_entry(rows[r2], pc) * p;
      Row merged;
      merged.reserve(rows[r2].size() + rows[pr].size());
      auto i = rows[r2].begin(), j = rows[pr].begin();
      while (i != rows[r2].end() || j != rows[pr].end()) {
        if (j == rows[pr].end() || (i != rows[r2].end() && i->first < j->first)) {
          merged.push_back(std::move(*i));
          ++i;
        } else if (i == rows[r2].end() || j->first < i->first) {
          mpz_class v = -f * j->second;
          merged.emplace_back(j->first, v);
          insert_sorted(col_rows[j->first], r2);
          ++j;
        } else {
          mpz_class v = i->second - f * j->second;
          if (v != 0)
            merged.emplace_back(i->first, v);
          else
            erase_sorted(col_rows[i->first], r2);
          ++i;
          ++j;
        }
      }
      rows[r2] = std::move(merged);
    }
    for (const auto& e : rows[pr]) erase_sorted(col_rows[e.first], pr);
    rows[pr].clear();
    ++unit_pivots;
  }

  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::uint32_t c = 0; c < col_rows.size(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  SmithForm out;
  out.factors.assign(unit_pivots, mpz_class(1));
  if (!live_rows.empty()) {
    std::unordered_map<std::uint32_t, std::size_t> col_pos;
    for (std::size_t k = 0; k < live_cols.size(); ++k) col_pos[live_cols[k]] = k;
    std::vector<std::vector<mpz_class>> dense(live_rows.size(), std::vector<mpz_class>(live_cols.size()));
    for (std::size_t k = 0; k < live_rows.size(); ++k)
      for (const auto& e : rows[live_rows[k]]) dense[k][col_pos.at(e.first)] = e.second;
    SmithForm rest = smith_normal_form_dense(std::move(dense));
    out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
  }
  return out;
}

std::size_t rational_rank(const SparseMatrix& m) { return smith_normal_form(m).rank(); }

namespace {

template <class Col>
std::size_t low_of(const Col& c) {
  return c.idx.back();
}

// out = s * x - t * y over sorted sparse columns.
template <class Col>
Col combine(const Col& x, const mpz_class& s, const Col& y, const mpz_class& t) {
  Col out;
  std::size_t i = 0, j = 0;
  while (i < x.idx.size() || j < y.idx.size()) {
    if (j == y.idx.size() || (i < x.idx.size() && x.idx[i] < y.idx[j])) {
      out.idx.push_back(x.idx[i]);
      out.val.push_back(s * x.val[i]);
      ++i;
    } else if (i == x.idx.size() || y.idx[j] < x.idx[i]) {
      out.idx.push_back(y.idx[j]);
      out.val.push_back(-t * y.val[j]);
      ++j;
    } else {
      mpz_class v = s * x.val[i] - t * y.val[j];
      if (v != 0) {
        out.idx.push_back(x.idx[i]);
        out.val.push_back(v);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FilteredReduction::FilteredReduction(
    std::size_t size, const std::vector<std::vector<std::pair<std::size_t, long>>>& column,
    bool keep_representatives)
    : size_(size), reduced_(size), pivot_owner_(size, -1), essential_slot_(size, -1) {
  if (keep_representatives) combo_.resize(size);
  for (std::size_t e = 0; e < size; ++e) {
    Column r;
    auto entries = column[e];
    std::sort(entries.begin(), entries.end());
    for (auto [i, v] : entries) {
      if (i >= e) throw InternalError("filtered reduction needs strictly earlier differential terms");
      if (!r.idx.empty() && r.idx.back() == i)
        r.val.back() += v;
      else {
        r.idx.push_back(i);
        r.val.push_back(v);
      }
    }
    for (std::size_t k = r.idx.size(); k-- > 0;)
      if (r.val[k] == 0) {
        r.idx.erase(r.idx.begin() + static_cast<std::ptrdiff_t>(k));
        r.val.erase(r.val.begin() + static_cast<std::ptrdiff_t>(k));
      }
    Column v;
    if (keep_representatives) {
      v.idx.push_back(e);
      v.val.push_back(1);
    }
    while (!r.idx.empty()) {
      std::ptrdiff_t owner = pivot_owner_[low_of(r)];
      if (owner < 0) break;
      const Column& ro = reduced_[static_cast<std::size_t>(owner)];
      mpz_class a = r.val.back(), b = ro.val.back();
      mpz_class g = gcd(a, b);
      mpz_class s = b / g, t = a / g;
      r = combine(r, s, ro, t);
      if (keep_representatives) v = combine(v, s, combo_[static_cast<std::size_t>(owner)], t);
      mpz_class content = 0;
      for (const auto& x : r.val) content = gcd(content, x);
      for (const auto& x : v.val) content = gcd(content, x);
      if (content > 1) {
        for (auto& x : r.val) x /= content;
        for (auto& x : v.val) x /= content;
      }
    }
    if (!r.idx.empty()) pivot_owner_[low_of(r)] = static_cast<std::ptrdiff_t>(e);
    reduced_[e] = std::move(r);
    if (keep_representatives) combo_[e] = std::move(v);
  }
  for (std::size_t e = 0; e < size; ++e)
    if (reduced_[e].idx.empty() && pivot_owner_[e] < 0) {
      essential_slot_[e] = static_cast<std::ptrdiff_t>(essential_.size());
      essential_.push_back(e);
    }
}

const std::vector<mpz_class>& FilteredReduction::representative(std::size_t k) const {
  if (combo_.empty()) throw InternalError("representatives were not kept");
  return combo_[essential_.at(k)].val;
}

const std::vector<std::size_t>& FilteredReduction::representative_support(std::size_t k) const {
  if (combo_.empty()) throw InternalError("representatives were not kept");
  return combo_[essential_.at(k)].idx;
}

std::vector<mpq_class> FilteredReduction::coordinates(const SparseVector& cycle) const {
  if (combo_.empty()) throw InternalError("representatives were not kept");
  std::vector<mpq_class> coords(essential_.size());
  SparseVector z;
  for (const auto& [i, v] : cycle)
    if (v != 0) z[i] = v;
  auto subtract = [&](const Column& c, const mpq_class& f) {
    for (std::size_t k = 0; k < c.idx.size(); ++k) {
      mpq_class& slot = z[c.idx[k]];
      slot -= f * c.val[k];
      if (slot == 0) z.erase(c.idx[k]);
    }
  };
  while (!z.empty()) {
    auto it = std::prev(z.end());
    std::size_t low = it->first;
    mpq_class coef = it->second;
    if (low >= size_) throw InternalError("cycle index out of range");
    if (pivot_owner_[low] >= 0) {
      const Column& c = reduced_[static_cast<std::size_t>(pivot_owner_[low])];
      subtract(c, coef / mpq_class(c.val.back()));
    } else if (essential_slot_[low] >= 0) {
      const Column& c = combo_[low];
      mpq_class f = coef / mpq_class(c.val.back());
      coords[static_cast<std::size_t>(essential_slot_[low])] += f;
      subtract(c, f);
    } else {
      throw InternalError("vector is not a cycle of the reduced complex");
    }
  }
  return coords;
}

}  // namespace dkh
