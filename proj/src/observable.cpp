#include "substkit/observable.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "substkit/error.hpp"
#include "substkit/summation.hpp"

namespace substkit {

namespace {

constexpr std::size_t kMaxWindowTable = std::size_t{1} << 24;

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(ErrorCode::BadObservable, "bad number '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) fail(ErrorCode::BadObservable, "empty value");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const auto body = text.substr(0, text.size() - 1);
  // split "re+imi" at the last sign that is not an exponent sign
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
      return {parse_real(body.substr(0, k), text), parse_real(body.substr(k), text)};
  return {0.0, parse_real(body, text)};
}

void Observable::refresh_sup() {
  sup_ = 0.0;
  for (const auto& v : table_) sup_ = std::max(sup_, std::abs(v));
}

Observable Observable::one_code(const Alphabet& alphabet, const std::map<Letter, Complex>& values) {
  Observable f;
  f.letters_ = alphabet.size();
  f.table_.assign(alphabet.size(), Complex(0.0, 0.0));
  f.description_ = "code1:";
  bool first = true;
  for (const auto& [a, v] : values) {
    if (a >= alphabet.size()) fail(ErrorCode::BadObservable, "letter out of range");
    f.table_[a] = v;
    std::ostringstream s;
    s << (first ? "" : ",") << alphabet.name(a) << "=" << v.real();
    if (v.imag() != 0.0) s << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
    f.description_ += s.str();
    first = false;
  }
  f.refresh_sup();
  return f;
}

Observable Observable::window(const Alphabet& alphabet, std::size_t radius, const std::map<Word, Complex>& table) {
  Observable f;
  f.radius_ = radius;
  f.letters_ = alphabet.size();
  std::size_t size = 1;
  for (std::size_t i = 0; i < f.span(); ++i) {
    if (size > kMaxWindowTable / alphabet.size())
      fail(ErrorCode::BadObservable, "window table too large for radius " + std::to_string(radius));
    size *= alphabet.size();
  }
  f.table_.assign(size, Complex(0.0, 0.0));
  for (const auto& [w, v] : table) {
    if (w.size() != f.span()) fail(ErrorCode::BadObservable, "window of wrong length in table");
    std::size_t index = 0;
    for (Letter x : w) {
      if (x >= alphabet.size()) fail(ErrorCode::BadObservable, "letter out of range");
      index = index * alphabet.size() + x;
    }
    f.table_[index] = v;
  }
  f.description_ = "window:r=" + std::to_string(radius) + " (" + std::to_string(table.size()) + " entries)";
  f.refresh_sup();
  return f;
}

Observable Observable::constant(const Alphabet& alphabet, Complex value) {
  std::map<Letter, Complex> values;
  for (Letter a = 0; a < alphabet.size(); ++a) values[a] = value;
  auto f = one_code(alphabet, values);
  f.description_ = value == Complex(1.0, 0.0) ? "const1" : "constant";
  return f;
}

Observable Observable::parse(std::string_view spec, const Alphabet& alphabet) {
  if (spec == "const1") return constant(alphabet, Complex(1.0, 0.0));
  if (spec.starts_with("code1:")) {
    std::map<Letter, Complex> values;
    for (const auto& item : split(spec.substr(6), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorCode::BadObservable, "expected letter=value, got '" + item + "'");
      const auto letter = alphabet.find(item.substr(0, eq));
      if (!letter) fail(ErrorCode::BadObservable, "unknown letter '" + item.substr(0, eq) + "'");
      if (!values.emplace(*letter, parse_complex(item.substr(eq + 1))).second)
        fail(ErrorCode::BadObservable, "letter '" + item.substr(0, eq) + "' given twice");
    }
    return one_code(alphabet, values);
  }
  if (spec.starts_with("window:r=")) {
    const auto rest = spec.substr(9);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) fail(ErrorCode::BadObservable, "expected window:r=<radius>:<file>");
    std::size_t radius = 0;
    const auto r_text = rest.substr(0, colon);
    auto res = std::from_chars(r_text.data(), r_text.data() + r_text.size(), radius);
    if (res.ec != std::errc{} || res.ptr != r_text.data() + r_text.size())
      fail(ErrorCode::BadObservable, "bad window radius '" + std::string(r_text) + "'");
    const std::string path(rest.substr(colon + 1));
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadObservable, "cannot read window table '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::BadObservable, std::string("malformed window table: ") + e.what());
    }
    if (!doc.is_object()) fail(ErrorCode::BadObservable, "window table must be a JSON object");
    std::map<Word, Complex> table;
    for (const auto& [key, value] : doc.items()) {
      Word w;
      std::istringstream words(key);
      for (std::string name; words >> name;) {
        const auto letter = alphabet.find(name);
        if (!letter) fail(ErrorCode::BadObservable, "unknown letter '" + name + "' in window table");
        w.push_back(*letter);
      }
      Complex v;
      if (value.is_number()) {
        v = {value.get<double>(), 0.0};
      } else if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        v = {value[0].get<double>(), value[1].get<double>()};
      } else {
        fail(ErrorCode::BadObservable, "window value must be a number or [re, im]");
      }
      table[w] = v;
    }
    return window(alphabet, radius, table);
  }
  fail(ErrorCode::BadObservable, "unknown observable '" + std::string(spec) + "'");
}

Complex Observable::empirical_mean(const FixedPointHandle& handle, std::uint64_t length) const {
  const BlockExpander expander(handle);
  constexpr std::uint64_t chunk = 1 << 16;
  std::vector<Letter> buffer(chunk + span());
  ComplexSum sum;
  for (std::uint64_t lo = 0; lo < length; lo += chunk) {
    const std::uint64_t count = std::min(chunk, length - lo);
    expander.fill(lo, std::span<Letter>(buffer.data(), count + span() - 1));
    for (std::uint64_t i = 0; i < count; ++i) sum.add((*this)(buffer.data() + i));
  }
  return sum.value() / static_cast<double>(length);
}

Observable Observable::centered(const FixedPointHandle& handle, std::uint64_t prefix_length) const {
  Observable f = *this;
  Complex m;
  if (radius_ == 0 && is_primitive(handle.base()).primitive) {
    const auto delta = densities(handle.base());
    ComplexSum sum;
    for (std::size_t a = 0; a < delta.size(); ++a) sum.add(table_[a] * delta[a]);
    m = sum.value();
    f.mean_source_ = "densities";
  } else {
    m = empirical_mean(handle, prefix_length);
    f.mean_source_ = "prefix:" + std::to_string(prefix_length);
  }
  for (auto& v : f.table_) v -= m;
  f.mean_ = mean_ + m;
  f.refresh_sup();
  return f;
}

}  // namespace substkit
