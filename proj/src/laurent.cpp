#include "blobcalc/laurent.hpp"

#include "blobcalc/errors.hpp"

#include <sstream>

namespace blobcalc {

int Laurent::min_degree() const {
  if (c_.empty()) fail("EmptyPolynomial", "min_degree of zero polynomial");
  return c_.begin()->first;
}

int Laurent::max_degree() const {
  if (c_.empty()) fail("EmptyPolynomial", "max_degree of zero polynomial");
  return c_.rbegin()->first;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace blobcalc
