#pragma once

// Eventually periodic addresses in ({0,1} x Z)^N.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosdyn/cosine_map.hpp"

namespace cosdyn {

using Entry = StripIndex;

// Entry order: every left entry (j = 1) precedes every right entry (j = 0);
// within a half plane entries compare by (-1)^j k.
bool entry_less(const Entry& e1, const Entry& e2);

// preperiod followed by period repeated forever. Always canonical: the period
// is primitive and the preperiod has no entry that could be folded into it.
class Address {
 public:
  Address(std::vector<Entry> preperiod, std::vector<Entry> period);

  static Address periodic(std::vector<Entry> period) { return Address({}, std::move(period)); }
  // "[(j,k) ...];[(j,k) ...]" -- preperiod;period. Throws PreconditionError.
  static Address parse(std::string_view text);

  const std::vector<Entry>& preperiod() const { return preperiod_; }
  const std::vector<Entry>& period() const { return period_; }
  bool is_periodic() const { return preperiod_.empty(); }

  Entry entry(std::size_t n) const;
  Entry front() const { return entry(0); }

  Address shift() const;
  Address shift(std::size_t times) const;
  Address prepend(const Entry& e) const;

  // Adds dk to the k-component of the first entry.
  Address with_first_translated(long dk) const;

  std::string to_string() const;

  bool operator==(const Address&) const = default;

 private:
  void canonicalize();

  std::vector<Entry> preperiod_;
  std::vector<Entry> period_;
};

// Index of the first differing entry, nullopt when equal.
std::optional<std::size_t> first_difference(const Address& s, const Address& t);

// Lexicographic extension of entry_less.
std::strong_ordering addr_compare(const Address& s, const Address& t);

// d(s, t) = 2^{-k} with k the first differing index, 0 when equal.
double addr_distance(const Address& s, const Address& t);

}  // namespace cosdyn
