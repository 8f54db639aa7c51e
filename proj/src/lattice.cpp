#include "qcat/lattice.hpp"

#include <algorithm>

namespace qcat {

FiniteLattice::FiniteLattice(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  for (int i = 0; i < (int)elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw InputError("lattice: duplicate element id '" + elements_[i] + "'");
  }
  leq_.assign(elements_.size(), std::vector<uint8_t>(elements_.size(), 0));
}

int FiniteLattice::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("lattice: unknown element id '" + id + "'");
  return it->second;
}

void FiniteLattice::add_leq(const std::string& a, const std::string& b) {
  leq_[index(a)][index(b)] = 1;
}

bool FiniteLattice::leq(const std::string& a, const std::string& b) const {
  return leq(index(a), index(b));
}

void FiniteLattice::finalize() {
  const int n = size();
  for (int i = 0; i < n; ++i) leq_[i][i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!leq_[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (leq_[k][j]) leq_[i][j] = 1;
    }

  bottom_ = top_ = -1;
  for (int i = 0; i < n; ++i) {
    bool bot = true, top = true;
    for (int j = 0; j < n; ++j) {
      bot = bot && leq_[i][j];
      top = top && leq_[j][i];
    }
    if (bot && bottom_ < 0) bottom_ = i;
    if (top && top_ < 0) top_ = i;
  }

  meet_.assign((size_t)n * n, -1);
  join_.assign((size_t)n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet_[(size_t)a * n + b] = scan_bound(a, b, false);
      join_[(size_t)a * n + b] = scan_bound(a, b, true);
    }
}

int FiniteLattice::scan_bound(int a, int b, bool upper) const {
  const int n = size();
  std::vector<int> cands;
  for (int c = 0; c < n; ++c) {
    bool ok = upper ? (leq_[a][c] && leq_[b][c]) : (leq_[c][a] && leq_[c][b]);
    if (ok) cands.push_back(c);
  }
  for (int c : cands) {
    bool extreme = true;
    for (int d : cands) {
      bool below = upper ? leq_[c][d] : leq_[d][c];
      if (!below) { extreme = false; break; }
    }
    if (extreme) return c;
  }
  return -1;
}

int FiniteLattice::meet(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) {
    if (acc < 0) return -1;
    acc = meet2(acc, x);
  }
  return acc;
}

int FiniteLattice::join(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) {
    if (acc < 0) return -1;
    acc = join2(acc, x);
  }
  return acc;
}

std::vector<std::string> FiniteLattice::lattice_violations(const std::string& where) const {
  std::vector<std::string> out;
  const int n = size();
  if (n == 0) {
    out.push_back(where + ": empty carrier (a finite lattice needs a top and bottom)");
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        out.push_back(where + ": order not antisymmetric between '" + elements_[i] +
                      "' and '" + elements_[j] + "'");
  if (bottom_ < 0) out.push_back(where + ": no bottom element");
  if (top_ < 0) out.push_back(where + ": no top element");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (meet2(i, j) < 0)
        out.push_back(where + ": no meet for {'" + elements_[i] + "', '" + elements_[j] + "'}");
      if (join2(i, j) < 0)
        out.push_back(where + ": no join for {'" + elements_[i] + "', '" + elements_[j] + "'}");
    }
  return out;
}

}  // namespace qcat
