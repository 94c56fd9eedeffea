#pragma once

// Brute-force ground truth: enumerate S_n, decompose each permutation into
// standard cycle form and tally its adjacent cycles.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "aqc/counts.hpp"
#include "aqc/nat.hpp"

namespace aqc {

/// A permutation of {1..n} in one-line notation: image()[i] is the image of i+1.
class Permutation {
 public:
  // Throws InvalidArgument unless `image` is a bijection on {1..n}.
  explicit Permutation(std::vector<unsigned> image);

  static Permutation identity(unsigned n);
  // Accepts digit strings such as "432157869" (n <= 9 only).
  static Permutation from_digits(const std::string& digits);

  std::size_t size() const { return image_.size(); }
  unsigned operator()(unsigned i) const { return image_[i - 1]; }  // 1-based
  const std::vector<unsigned>& image() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> image_;
};

/// Cycles written minimum-first, ordered by their minima.
struct CycleForm {
  std::vector<std::vector<unsigned>> cycles;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

CycleForm cycle_decomposition(const Permutation& p);
Permutation recompose(const CycleForm& form, unsigned n);
// "(14)(23)(5)(678)(9)"; elements are comma-separated once any exceeds 9.
std::string to_string(const CycleForm& form);

/// True iff the minimum-first cycle is exactly (a, a+1, ..., a+len-1).
bool is_adjacent_cycle(const std::vector<unsigned>& cycle);

unsigned count_adjacent_cycles(const Permutation& p, unsigned q);

struct EnumerationOptions {
  unsigned cap = 10;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// [a(n,0), ..., a(n, n/q)] by visiting all n! permutations.
/// Throws ResourceLimitError when n > options.cap.
std::vector<Nat> oracle_distribution(unsigned n, unsigned q, const EnumerationOptions& options = {});

/// Joint distribution over the lengths in `lengths`; absent keys are zero.
std::map<KVector, Nat> oracle_multi(unsigned n, const MultiSpec& lengths,
                                    const EnumerationOptions& options = {});

}  // namespace aqc
