#include "aqc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

#include "aqc/errors.hpp"

namespace aqc {

Permutation::Permutation(std::vector<unsigned> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size() + 1, false);
  for (unsigned v : image_) {
    if (v < 1 || v > image_.size() || hit[v]) {
      throw InvalidArgument("not a permutation of {1.." + std::to_string(image_.size()) + "}");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 1u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_digits(const std::string& digits) {
  std::vector<unsigned> img;
  for (char c : digits) {
    if (c < '1' || c > '9') throw InvalidArgument("bad permutation digit in \"" + digits + "\"");
    img.push_back(static_cast<unsigned>(c - '0'));
  }
  return Permutation(std::move(img));
}

CycleForm cycle_decomposition(const Permutation& p) {
  const auto n = static_cast<unsigned>(p.size());
  std::vector<bool> seen(n + 1, false);
  CycleForm form;
  for (unsigned a = 1; a <= n; ++a) {
    if (seen[a]) continue;
    std::vector<unsigned> cycle;
    for (unsigned x = a; !seen[x]; x = p(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

Permutation recompose(const CycleForm& form, unsigned n) {
  std::vector<unsigned> img(n, 0);
  for (const auto& c : form.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > n) throw InvalidArgument("cycle element out of range");
      img[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

std::string to_string(const CycleForm& form) {
  bool wide = false;
  for (const auto& c : form.cycles) {
    for (unsigned v : c) wide = wide || v > 9;
  }
  std::string out;
  for (const auto& c : form.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (wide && i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

bool is_adjacent_cycle(const std::vector<unsigned>& cycle) {
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    if (cycle[i] != cycle[0] + i) return false;
  }
  return !cycle.empty();
}

unsigned count_adjacent_cycles(const Permutation& p, unsigned q) {
  if (q == 0) throw InvalidArgument("cycle length q must be at least 1");
  unsigned count = 0;
  for (const auto& c : cycle_decomposition(p).cycles) {
    if (c.size() == q && is_adjacent_cycle(c)) ++count;
  }
  return count;
}

namespace {

// Calls visit(length) for every adjacent cycle of the one-line image
// img[0..n) (1-based values). Scanning minima in increasing order means each
// cycle is entered at its smallest element.
template <typename Visit>
inline void for_each_adjacent_cycle(const unsigned* img, unsigned n, Visit&& visit) {
  std::uint32_t seen = 0;
  for (unsigned a = 1; a <= n; ++a) {
    if (seen & (1u << a)) continue;
    unsigned len = 0;
    bool adjacent = true;
    unsigned x = a;
    do {
      seen |= 1u << x;
      const unsigned y = img[x - 1];
      if (y != x + 1 && y != a) adjacent = false;
      x = y;
      ++len;
    } while (x != a);
    if (adjacent) visit(len);
  }
}

// Enumerates S_n split into n partitions by the value of p(1), running
// tally(img) over each permutation. Each worker owns a Tally built by
// make_tally(); merge(dst, src) adds src into dst.
template <typename Tally, typename Make, typename Step, typename Merge>
Tally enumerate(unsigned n, unsigned threads, Make make_tally, Step step, Merge merge) {
  Tally total = make_tally();
  if (n == 0) {
    step(total, static_cast<const unsigned*>(nullptr));
    return total;
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);

  std::vector<Tally> partials(threads, make_tally());
  std::atomic<unsigned> next{1};
  auto worker = [&](unsigned id) {
    std::vector<unsigned> img(n);
    for (unsigned first = next.fetch_add(1); first <= n; first = next.fetch_add(1)) {
      img[0] = first;
      unsigned pos = 1;
      for (unsigned v = 1; v <= n; ++v) {
        if (v != first) img[pos++] = v;
      }
      do {
        step(partials[id], img.data());
      } while (std::next_permutation(img.begin() + 1, img.end()));
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  for (const auto& p : partials) merge(total, p);
  return total;
}

void check_cap(unsigned n, const EnumerationOptions& options) {
  if (n > options.cap) {
    throw ResourceLimitError("enumerating S_" + std::to_string(n) + " exceeds the cap n <= " +
                             std::to_string(options.cap));
  }
  if (n > 31) throw ResourceLimitError("enumeration supports n <= 31");
}

using Counts = std::vector<std::uint64_t>;

void add_into(Counts& dst, const Counts& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

}  // namespace

std::vector<Nat> oracle_distribution(unsigned n, unsigned q, const EnumerationOptions& options) {
  if (q == 0) throw InvalidArgument("cycle length q must be at least 1");
  check_cap(n, options);
  const std::size_t width = n / q + 1;
  Counts counts = enumerate<Counts>(
      n, options.threads, [&] { return Counts(width, 0); },
      [&](Counts& tally, const unsigned* img) {
        unsigned k = 0;
        for_each_adjacent_cycle(img, n, [&](unsigned len) { k += (len == q); });
        ++tally[k];
      },
      add_into);
  return {counts.begin(), counts.end()};
}

std::map<KVector, Nat> oracle_multi(unsigned n, const MultiSpec& lengths,
                                    const EnumerationOptions& options) {
  check_cap(n, options);
  const std::size_t m = lengths.size();

  // Mixed-radix index over (k_1..k_m), k_j <= n/q_j.
  std::vector<std::size_t> radix(m), stride(m);
  std::size_t cells = 1;
  for (std::size_t j = 0; j < m; ++j) {
    radix[j] = n / lengths[j] + 1;
    stride[j] = cells;
    cells *= radix[j];
  }
  std::vector<long> slot(n + 1, -1);
  for (std::size_t j = 0; j < m; ++j) {
    if (lengths[j] <= n) slot[lengths[j]] = static_cast<long>(j);
  }

  Counts counts = enumerate<Counts>(
      n, options.threads, [&] { return Counts(cells, 0); },
      [&](Counts& tally, const unsigned* img) {
        std::size_t index = 0;
        for_each_adjacent_cycle(img, n, [&](unsigned len) {
          if (slot[len] >= 0) index += stride[static_cast<std::size_t>(slot[len])];
        });
        ++tally[index];
      },
      add_into);

  std::map<KVector, Nat> out;
  for (std::size_t index = 0; index < cells; ++index) {
    if (counts[index] == 0) continue;
    KVector ks(m);
    for (std::size_t j = 0; j < m; ++j) ks[j] = static_cast<unsigned>(index / stride[j] % radix[j]);
    out.emplace(std::move(ks), Nat(counts[index]));
  }
  return out;
}

}  // namespace aqc
