#include "nec/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nec {

Perm Perm::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = 1;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_one_based(const std::vector<int>& images) {
  std::vector<int> v(images);
  for (int& x : v) --x;
  return from_images(std::move(v));
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  Perm p = identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("expected point in cycle notation");
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree) throw std::invalid_argument("cycle point out of range");
      cyc.push_back(pt - 1);
      skip_ws();
      if (pos < text.size() && (text[pos] == ',' || std::isspace(static_cast<unsigned char>(text[pos])))) {
        if (text[pos] == ',') ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("unclosed cycle");
    ++pos;
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      int from = cyc[t], to = cyc[(t + 1) % cyc.size()];
      if (p.img_[from] != from) throw std::invalid_argument("point repeated in cycles");
      p.img_[from] = to;
    }
    skip_ws();
  }
  std::vector<char> seen(degree, 0);
  for (int x : p.img_) {
    if (seen[x]) throw std::invalid_argument("cycles are not disjoint");
    seen[x] = 1;
  }
  return p;
}

Perm Perm::inverse() const {
  Perm q;
  q.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) q.img_[img_[i]] = i;
  return q;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  Perm r;
  r.img_.resize(p.img_.size());
  for (int i = 0; i < p.degree(); ++i) r.img_[i] = q.img_[p.img_[i]];
  return r;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Perm acc = identity(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

long long Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_str() const {
  std::vector<char> seen(img_.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) { seen[i] = 1; continue; }
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("cannot shrink a permutation");
  Perm p = identity(degree);
  std::copy(img_.begin(), img_.end(), p.img_.begin());
  return p;
}

Perm Perm::shifted(int offset, int degree) const {
  if (offset + this->degree() > degree) throw std::invalid_argument("shift out of range");
  Perm p = identity(degree);
  for (int i = 0; i < this->degree(); ++i) p.img_[offset + i] = offset + img_[i];
  return p;
}

} // namespace nec
