#include "burnside/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace burnside {

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  Permutation p;
  p.images.resize(static_cast<size_t>(degree));
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[static_cast<size_t>(v)] = 1;
  }
  Permutation p;
  p.images = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::string& cycles) {
  Permutation result = identity(degree);
  size_t i = 0;
  auto skip_ws = [&] { while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i; };
  skip_ws();
  bool any = false;
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw std::invalid_argument("Permutation: expected '(' in \"" + cycles + "\"");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < cycles.size() && cycles[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(cycles[i])))
        throw std::invalid_argument("Permutation: expected point number in \"" + cycles + "\"");
      int v = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i])))
        v = v * 10 + (cycles[i++] - '0');
      if (v >= degree)
        throw std::invalid_argument("Permutation: point " + std::to_string(v) +
                                    " out of range for degree " + std::to_string(degree));
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= cycles.size()) throw std::invalid_argument("Permutation: missing ')' in \"" + cycles + "\"");
    ++i;  // skip ')'
    any = true;
    if (cycle.size() > 1) {
      Permutation rot = identity(degree);
      for (size_t j = 0; j < cycle.size(); ++j)
        rot.images[static_cast<size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
      // Right-to-left application: the cycle written first acts last.
      result = result * rot;
    }
    skip_ws();
  }
  if (!any) throw std::invalid_argument("Permutation: empty cycle string");
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) p.images[static_cast<size_t>(images[static_cast<size_t>(i)])] = i;
  return p;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || images[static_cast<size_t>(start)] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    do {
      seen[static_cast<size_t>(x)] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = images[static_cast<size_t>(x)];
    } while (x != start);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("Permutation: degree mismatch in composition");
  Permutation r;
  r.images.resize(p.images.size());
  for (int x = 0; x < p.degree(); ++x)
    r.images[static_cast<size_t>(x)] = p.images[static_cast<size_t>(q.images[static_cast<size_t>(x)])];
  return r;
}

}  // namespace burnside
