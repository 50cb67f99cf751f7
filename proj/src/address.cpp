#include "cosdyn/address.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cosdyn {

bool entry_less(const Entry& e1, const Entry& e2) {
  if (e1.j != e2.j) return e1.j == 1 && e2.j == 0;
  const long sign = e1.j == 0 ? 1 : -1;
  return sign * e1.k < sign * e2.k;
}

Address::Address(std::vector<Entry> preperiod, std::vector<Entry> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw PreconditionError("address period must be nonempty");
  for (const Entry& e : preperiod_)
    if (e.j != 0 && e.j != 1) throw PreconditionError("address entries need j in {0,1}");
  for (const Entry& e : period_)
    if (e.j != 0 && e.j != 1) throw PreconditionError("address entries need j in {0,1}");
  canonicalize();
}

void Address::canonicalize() {
  // primitive root of the period
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  // fold the preperiod tail into the period
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

Entry Address::entry(std::size_t n) const {
  if (n < preperiod_.size()) return preperiod_[n];
  return period_[(n - preperiod_.size()) % period_.size()];
}

Address Address::shift() const {
  if (!preperiod_.empty()) return Address({preperiod_.begin() + 1, preperiod_.end()}, period_);
  std::vector<Entry> rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return Address({}, std::move(rotated));
}

Address Address::shift(std::size_t times) const {
  Address out = *this;
  for (std::size_t i = 0; i < times; ++i) out = out.shift();
  return out;
}

Address Address::prepend(const Entry& e) const {
  std::vector<Entry> pre;
  pre.reserve(preperiod_.size() + 1);
  pre.push_back(e);
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return Address(std::move(pre), period_);
}

Address Address::with_first_translated(long dk) const {
  if (!preperiod_.empty()) {
    auto pre = preperiod_;
    pre.front().k += dk;
    return Address(std::move(pre), period_);
  }
  Entry e = period_.front();
  e.k += dk;
  return shift().prepend(e);
}

std::string Address::to_string() const {
  std::ostringstream os;
  auto list = [&](const std::vector<Entry>& es) {
    os << '[';
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i) os << ' ';
      os << '(' << es[i].j << ',' << es[i].k << ')';
    }
    os << ']';
  };
  list(preperiod_);
  os << ';';
  list(period_);
  return os.str();
}

namespace {

std::vector<Entry> parse_list(std::string_view text) {
  std::vector<Entry> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto number = [&]() -> long {
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw PreconditionError("malformed address entry: " + std::string(text));
    return std::stol(std::string(text.substr(start, i - start)));
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw PreconditionError("address list must start with '['");
  ++i;
  for (;;) {
    skip();
    if (i >= text.size()) throw PreconditionError("unterminated address list");
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (text[i] != '(') throw PreconditionError("address entry must start with '('");
    ++i;
    const long j = number();
    const long k = number();
    skip();
    if (i >= text.size() || text[i] != ')') throw PreconditionError("address entry must end with ')'");
    ++i;
    if (j != 0 && j != 1) throw PreconditionError("address entries need j in {0,1}");
    out.push_back({static_cast<int>(j), k});
  }
  skip();
  if (i != text.size()) throw PreconditionError("trailing characters in address list");
  return out;
}

}  // namespace

Address Address::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw PreconditionError("address needs 'preperiod;period'");
  return Address(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1)));
}

std::optional<std::size_t> first_difference(const Address& s, const Address& t) {
  const std::size_t pre = std::max(s.preperiod().size(), t.preperiod().size());
  const std::size_t l = std::lcm(s.period().size(), t.period().size());
  for (std::size_t n = 0; n < pre + l; ++n)
    if (s.entry(n) != t.entry(n)) return n;
  return std::nullopt;
}

std::strong_ordering addr_compare(const Address& s, const Address& t) {
  const auto n = first_difference(s, t);
  if (!n) return std::strong_ordering::equal;
  return entry_less(s.entry(*n), t.entry(*n)) ? std::strong_ordering::less : std::strong_ordering::greater;
}

double addr_distance(const Address& s, const Address& t) {
  const auto n = first_difference(s, t);
  if (!n) return 0.0;
  return std::ldexp(1.0, -static_cast<int>(*n));
}

}  // namespace cosdyn
