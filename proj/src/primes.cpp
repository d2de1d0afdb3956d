#include "towers/primes.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace towers {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) {
      r = mulmod(r, a, m);
    }
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) {
      return n == p;
    }
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases decide primality for every 64-bit integer.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

class Table {
 public:
  static Table& instance() {
    static Table table;
    return table;
  }

  std::uint64_t at(std::size_t index) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (primes_.size() < index) {
      grow();
    }
    return primes_[index - 1];
  }

  std::optional<std::size_t> position(std::uint64_t p) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (primes_.back() < p) {
      grow();
    }
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - primes_.begin()) + 1;
  }

 private:
  Table() : primes_{2, 3, 5, 7, 11, 13} {}

  void grow() {
    std::uint64_t candidate = primes_.back();
    for (;;) {
      candidate += (candidate == 2) ? 1 : 2;
      bool divisible = false;
      for (std::uint64_t p : primes_) {
        if (p * p > candidate) {
          break;
        }
        if (candidate % p == 0) {
          divisible = true;
          break;
        }
      }
      if (!divisible) {
        primes_.push_back(candidate);
        return;
      }
    }
  }

  std::mutex mutex_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace

std::uint64_t PrimeTable::prime(std::size_t index) {
  return Table::instance().at(index);
}

std::optional<std::size_t> PrimeTable::index_of(std::uint64_t p) {
  if (!miller_rabin(p)) {
    return std::nullopt;
  }
  return Table::instance().position(p);
}

bool PrimeTable::is_prime(std::uint64_t n) { return miller_rabin(n); }

}  // namespace towers
