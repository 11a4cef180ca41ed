#include "nimforge/permutation.hpp"

#include "nimforge/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace nimforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorKind::BadInput, "image list is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::string t;
  for (char c : text)
    if (c != ' ' || (!t.empty() && t.back() != ' ' && t.back() != '(')) t += c;
  if (t.empty() || t == "e" || t == "()") return Permutation(std::move(images));
  std::size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] == ' ') {
      ++pos;
      continue;
    }
    if (t[pos] != '(') throw Error(ErrorKind::BadInput, "bad cycle notation '" + text + "'");
    const auto close = t.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorKind::BadInput, "unclosed cycle in '" + text + "'");
    const std::string body = t.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    const bool separated = body.find_first_of(" ,") != std::string::npos;
    if (separated) {
      std::string item;
      std::stringstream ss(body);
      while (ss >> item) {
        item.erase(std::remove(item.begin(), item.end(), ','), item.end());
        if (!item.empty()) cycle.push_back(std::stoi(item) - 1);
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error(ErrorKind::BadInput, "bad cycle notation '" + text + "'");
        cycle.push_back(c - '1');
      }
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw Error(ErrorKind::BadInput, "cycle point out of range in '" + text + "'");
      images[static_cast<std::size_t>(from)] = to;
    }
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[i])] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::order() const {
  int o = 1;
  for (int len : cycle_lengths()) o = std::lcm(o, len);
  return o;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (images_[i] == i) out.push_back(i);
  return out;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  const bool spaced = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first && spaced) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "e" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "composing permutations of different size");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(out));
}

}  // namespace nimforge
