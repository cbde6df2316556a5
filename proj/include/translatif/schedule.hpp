#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "translatif/errors.hpp"
#include "translatif/hfset.hpp"

namespace translatif {

// Container dictifs C_1, C_2, ... with the strictly increasing index map μ.
// Universal blocks at nesting level i of a rank-K translation range over
// C_{μ^i K}.
class ContainerSchedule {
 public:
  using Generator = std::function<HfSet(unsigned)>;
  using Mu = std::function<unsigned(unsigned)>;

  ContainerSchedule(std::string name, Generator gen, Mu mu, unsigned cap)
      : name_(std::move(name)), gen_(std::move(gen)), mu_(std::move(mu)), cap_(cap) {}

  // C_K = P_K, μK = K + 1.
  static ContainerSchedule p_ladder(unsigned cap = kMaxPLevel) {
    if (cap > kMaxPLevel) throw CapExceeded("p_ladder: cap above P_" + std::to_string(kMaxPLevel));
    return ContainerSchedule(
        "P", [](unsigned k) { return p_level(k); }, [](unsigned k) { return k + 1; }, cap);
  }

  // containers[0] is C_1; μK = K + 1.
  static ContainerSchedule from_list(std::string name, std::vector<HfSet> containers) {
    const auto n = static_cast<unsigned>(containers.size());
    return ContainerSchedule(
        std::move(name), [list = std::move(containers)](unsigned k) { return list.at(k - 1); },
        [](unsigned k) { return k + 1; }, n);
  }

  const std::string& name() const noexcept { return name_; }
  unsigned cap() const noexcept { return cap_; }
  bool within_cap(unsigned k) const noexcept { return k >= 1 && k <= cap_; }

  HfSet container(unsigned k) const {
    if (!within_cap(k)) {
      throw CapExceeded("schedule " + name_ + ": container C_" + std::to_string(k) + " outside 1.." +
                        std::to_string(cap_));
    }
    return gen_(k);
  }

  unsigned mu(unsigned k) const { return mu_(k); }

  // Index of the container used at block-nesting level `level` for rank k.
  unsigned index_at_level(unsigned k, unsigned level) const {
    for (unsigned i = 0; i < level; ++i) k = mu_(k);
    return k;
  }

  // Violations of: ς ∈ C_K, C_K ⊆ C_{μK}, μ strictly increasing (within the cap).
  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    const HfSet empty;
    for (unsigned k = 1; k <= cap_; ++k) {
      const HfSet c = gen_(k);
      if (!member(empty, c)) problems.push_back("C_" + std::to_string(k) + " does not contain the empty dictif");
      const unsigned next = mu_(k);
      if (next <= k) problems.push_back("mu(" + std::to_string(k) + ") is not greater than " + std::to_string(k));
      if (k > 1 && mu_(k) <= mu_(k - 1)) problems.push_back("mu is not strictly increasing at " + std::to_string(k));
      if (next <= cap_ && next > k && !is_subset(c, gen_(next))) {
        problems.push_back("C_" + std::to_string(k) + " is not contained in C_" + std::to_string(next));
      }
    }
    return problems;
  }

 private:
  std::string name_;
  Generator gen_;
  Mu mu_;
  unsigned cap_;
};

}  // namespace translatif
