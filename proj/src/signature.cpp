#include "iwc/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "iwc/errors.hpp"

namespace iwc {

Signature Signature::normalized() const {
  std::vector<int> e = exponents;
  std::sort(e.begin(), e.end(), std::greater<>());
  int g = 0;
  for (int x : e) g = std::gcd(g, std::abs(x));
  if (g > 1)
    for (int& x : e) x /= g;
  return Signature(std::move(e));
}

bool Signature::is_simple() const {
  auto n = normalized();
  return std::all_of(n.exponents.begin(), n.exponents.end(), [](int x) { return x == 0 || x == 1; });
}

Signature Signature::scaled(int k) const {
  std::vector<int> e = exponents;
  for (int& x : e) x *= k;
  return Signature(std::move(e));
}

std::string Signature::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
  return os.str();
}

Signature Signature::parse(const std::string& s) {
  std::vector<int> e;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw ParseError("bad signature entry: " + item);
      e.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad signature: " + s);
    }
  }
  if (e.empty()) throw ParseError("empty signature");
  return Signature(std::move(e));
}

bool signature_less(const Signature& a, const Signature& b) {
  const auto na = a.normalized(), nb = b.normalized();
  return std::lexicographical_compare(na.exponents.begin(), na.exponents.end(), nb.exponents.begin(),
                                      nb.exponents.end());
}

}  // namespace iwc
