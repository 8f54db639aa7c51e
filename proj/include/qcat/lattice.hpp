#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcat/error.hpp"

namespace qcat {

// Finite lattice presented by its raw order relation. Element ids are
// literal strings, never canonicalized; indices follow declaration order.
//
// Populate with add_leq, then call finalize() exactly once: it closes the
// relation reflexively and transitively and memoizes all pairwise bounds by
// bound scans. Instances are immutable afterwards and safe to share.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  explicit FiniteLattice(std::vector<std::string> elements);

  void add_leq(const std::string& a, const std::string& b);
  void finalize();

  int size() const { return (int)elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(int i) const { return elements_.at(i); }
  int index(const std::string& id) const;  // InputError on unknown id
  bool has(const std::string& id) const { return index_.count(id) != 0; }

  bool leq(int a, int b) const { return leq_.at(a).at(b) != 0; }
  bool leq(const std::string& a, const std::string& b) const;

  // Bounds return -1 when absent; validation reports such holes.
  int meet2(int a, int b) const { return meet_.at(a * size() + b); }
  int join2(int a, int b) const { return join_.at(a * size() + b); }
  int meet(const std::vector<int>& xs) const;  // meet({}) = top
  int join(const std::vector<int>& xs) const;  // join({}) = bottom
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Order axioms and existence of all bounds; `where` prefixes messages.
  std::vector<std::string> lattice_violations(const std::string& where) const;

  bool operator==(const FiniteLattice& o) const {
    return elements_ == o.elements_ && leq_ == o.leq_;
  }

 private:
  int scan_bound(int a, int b, bool upper) const;

  std::vector<std::string> elements_;
  std::map<std::string, int> index_;
  std::vector<std::vector<uint8_t>> leq_;
  std::vector<int> meet_, join_;
  int bottom_ = -1;
  int top_ = -1;
};

}  // namespace qcat
