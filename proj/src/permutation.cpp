#include "substkit/permutation.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "substkit/error.hpp"

namespace substkit {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto x : image_) {
    if (x >= image_.size() || hit[x]) fail(ErrorCode::InternalInvariantViolation, "image table is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = i; !seen[x]; x = image_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

int Permutation::sign() const {
  int s = 1;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = image_[x]) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::cycles() const {
  const bool spaced = size() > 10;
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    for (std::size_t x = i; !seen[x]; x = image_[x]) {
      seen[x] = true;
      if (spaced && x != i) out += ' ';
      out += std::to_string(x);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) fail(ErrorCode::LengthMismatch, "composing permutations of different degree");
  std::vector<std::uint32_t> image(a.size());
  for (std::uint32_t x = 0; x < a.size(); ++x) image[x] = a(b(x));
  return Permutation(std::move(image));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  Permutation result = Permutation::identity(p.size());
  Permutation base = p;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

namespace {

[[noreturn]] void bad_cycles(const std::string& text) {
  fail(ErrorCode::ParseError, "bad cycle notation '" + text + "'");
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t n) {
  std::vector<std::uint32_t> image(n);
  std::iota(image.begin(), image.end(), 0u);
  if (text == "id") return Permutation(std::move(image));
  const bool spaced = text.find(' ') != std::string::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') bad_cycles(text);
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) bad_cycles(text);
      std::uint32_t x = 0;
      if (spaced) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) x = x * 10 + (text[pos++] - '0');
      } else {
        x = static_cast<std::uint32_t>(text[pos++] - '0');
      }
      if (x >= n) bad_cycles(text);
      cycle.push_back(x);
    }
    if (pos >= text.size() || cycle.empty()) bad_cycles(text);
    ++pos;
    for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  try {
    return Permutation(std::move(image));
  } catch (const Error&) {
    bad_cycles(text);
  }
}

std::uint64_t saturating_factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    f *= i;
  }
  return f;
}

}  // namespace substkit
