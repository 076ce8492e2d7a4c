#include "jk/partition.hpp"

#include <algorithm>
#include <functional>

namespace jk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

Partition Partition::conjugate() const {
  std::vector<int> c(largest(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

long Partition::sum_of_squares() const {
  long s = 0;
  for (int p : parts_) s += static_cast<long>(p) * p;
  return s;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed partition: " + std::string(text)); };
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') fail();
    t = t.substr(1, t.size() - 2);
  }
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = t.find(',', i);
    if (j == std::string::npos) j = t.size();
    std::string tok = t.substr(i, j - i);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) fail();
    parts.push_back(std::stoi(tok));
    i = j + 1;
    if (j + 1 == t.size()) fail();
  }
  return from_unsorted(std::move(parts));
}

PartitionStats stats(const Partition& mu) {
  PartitionStats s;
  s.z = 1;
  s.v = 1;
  Integer denom = 1;
  Rational sum = 0;
  for (int r = 1; r <= mu.largest(); ++r) {
    int m = mu.multiplicity(r);
    if (m == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(m));
    s.z *= pw * factorial(m);
    denom *= factorial(m);
    Integer pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(m));
    s.v *= pv;
    if (r >= 2) sum += Rational(r * m, r - 1);
  }
  s.u = factorial(static_cast<unsigned>(mu.length())) / denom;
  s.w = Rational(s.v) * sum;
  return s;
}

namespace {

void enumerate_into(int n, int min_part, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    enumerate_into(n - p, min_part, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, int min_part) { return enumerate_bounded(n, min_part, n); }

std::vector<Partition> enumerate_bounded(int n, int min_part, int max_part) {
  if (n < 0 || min_part < 1) throw std::invalid_argument("enumerate: bad arguments");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, min_part, max_part, prefix, out);
  return out;
}

Partition add_node(const Partition& lambda, int i) {
  if (i < 1 || i > lambda.length() + 1)
    throw NoSuchPartition("no such partition: row " + std::to_string(i) + " out of range for " +
                          lambda.to_string());
  if (i > 1 && lambda.part(i) == lambda.part(i - 1))
    throw NoSuchPartition("no such partition: cannot add a node to row " + std::to_string(i) +
                          " of " + lambda.to_string());
  std::vector<int> p = lambda.parts();
  if (i == lambda.length() + 1)
    p.push_back(1);
  else
    ++p[i - 1];
  return Partition(std::move(p));
}

Partition union_part(const Partition& mu, int r) {
  if (r <= 0) throw NoSuchPartition("no such partition: nonpositive part");
  std::vector<int> p = mu.parts();
  p.push_back(r);
  return Partition::from_unsorted(std::move(p));
}

Partition remove_part(const Partition& mu, int r) {
  std::vector<int> p = mu.parts();
  auto it = std::find(p.begin(), p.end(), r);
  if (it == p.end())
    throw NoSuchPartition("no such partition: " + std::to_string(r) + " is not a part of " +
                          mu.to_string());
  p.erase(it);
  return Partition(std::move(p));
}

Partition down(const Partition& mu, int r) {
  Partition rest = remove_part(mu, r);
  return r > 1 ? union_part(rest, r - 1) : rest;
}

Partition up(const Partition& mu, int r) { return union_part(remove_part(mu, r), r + 1); }

Integer refinement_count(const Partition& rho, const Partition& mu) {
  if (rho.weight() != mu.weight()) return 0;
  std::vector<int> room = mu.parts();
  const auto& parts = rho.parts();
  std::function<Integer(std::size_t)> go = [&](std::size_t k) -> Integer {
    if (k == parts.size()) return 1;
    Integer total = 0;
    for (auto& slot : room) {
      if (slot < parts[k]) continue;
      slot -= parts[k];
      total += go(k + 1);
      slot += parts[k];
    }
    return total;
  };
  return go(0);
}

}  // namespace jk
