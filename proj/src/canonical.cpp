#include <stdexcept>
#include <vector>

#include "spx/invariants.hpp"

namespace spx {

namespace {

// Swapping twins is an automorphism that fixes every other vertex, so only
// the least unplaced member of a twin pair needs to be tried at a position.
bool has_smaller_twin(std::span<const Bits> rows, int v, Bits unplaced) {
  const Bits below = unplaced & low_bits(v);
  bool found = false;
  for_each_bit(below, [&](int u) {
    if (!found && (rows[u] & ~bit(v)) == (rows[v] & ~bit(u))) found = true;
  });
  return found;
}

// Adjacency of v to the vertices at positions 0..j-1 as a j-bit word,
// position 0 in the most significant bit (graph6 column order).
Bits column_of(std::span<const Bits> rows, std::span<const int> order, int j, int v) {
  Bits col = 0;
  for (int k = 0; k < j; ++k) col = (col << 1) | ((rows[v] >> order[k]) & 1U);
  return col;
}

class LeastLabeling {
 public:
  explicit LeastLabeling(std::span<const Bits> rows)
      : rows_(rows), n_(static_cast<int>(rows.size())), order_(n_), cols_(n_), best_cols_(n_),
        best_order_(n_) {}

  std::vector<int> run() {
    search(0, low_bits(n_));
    return best_order_;
  }

 private:
  // -1, 0, 1 as the current prefix is less than, equal to, or greater than
  // the best prefix of the same length.
  int compare_prefix(int j) const {
    if (!have_best_) return -1;
    for (int k = 0; k < j; ++k) {
      if (cols_[k] != best_cols_[k]) return cols_[k] < best_cols_[k] ? -1 : 1;
    }
    return 0;
  }

  void search(int j, Bits unplaced) {
    const int cmp = compare_prefix(j);
    if (cmp > 0) return;
    if (j == n_) {
      if (cmp < 0) {
        best_cols_ = cols_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    Bits least = ~Bits{0};
    std::vector<std::pair<int, Bits>> candidates;
    for_each_bit(unplaced, [&](int v) {
      if (has_smaller_twin(rows_, v, unplaced)) return;
      const Bits c = column_of(rows_, order_, j, v);
      candidates.emplace_back(v, c);
      least = std::min(least, c);
    });
    if (cmp == 0 && least > best_cols_[j]) return;
    for (const auto& [v, c] : candidates) {
      if (c != least) continue;
      order_[j] = v;
      cols_[j] = c;
      search(j + 1, unplaced & ~bit(v));
    }
  }

  std::span<const Bits> rows_;
  int n_;
  std::vector<int> order_;
  std::vector<Bits> cols_;
  std::vector<Bits> best_cols_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

class MaxCanonicalTest {
 public:
  explicit MaxCanonicalTest(std::span<const Bits> rows)
      : rows_(rows), n_(static_cast<int>(rows.size())), order_(n_), identity_cols_(n_) {
    std::vector<int> identity(n_);
    for (int v = 0; v < n_; ++v) identity[v] = v;
    for (int j = 0; j < n_; ++j) identity_cols_[j] = column_of(rows_, identity, j, j);
  }

  bool run() { return search(0, low_bits(n_)); }

 private:
  // Invariant: the prefix built so far equals the identity's prefix.
  bool search(int j, Bits unplaced) {
    if (j == n_) return true;
    const Bits target = identity_cols_[j];
    std::vector<int> equal;
    bool larger = false;
    for_each_bit(unplaced, [&](int v) {
      if (larger || has_smaller_twin(rows_, v, unplaced)) return;
      const Bits c = column_of(rows_, order_, j, v);
      if (c > target) larger = true;
      else if (c == target) equal.push_back(v);
    });
    if (larger) return false;
    for (int v : equal) {
      order_[j] = v;
      if (!search(j + 1, unplaced & ~bit(v))) return false;
    }
    return true;
  }

  std::span<const Bits> rows_;
  int n_;
  std::vector<int> order_;
  std::vector<Bits> identity_cols_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::length_error("canonical_form: order " + std::to_string(g.order()) +
                            " exceeds limit of 14");
  }
  const std::vector<int> order = LeastLabeling(g.rows()).run();
  std::vector<int> new_label(g.order());
  for (int pos = 0; pos < g.order(); ++pos) new_label[order[pos]] = pos;
  return {encode_graph6(g.relabeled(new_label))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder) {
      throw std::length_error("are_isomorphic: order exceeds limit of 14");
    }
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

bool is_max_canonical(std::span<const Bits> rows) { return MaxCanonicalTest(rows).run(); }

}  // namespace spx
