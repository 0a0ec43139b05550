#include "branchlab/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace branchlab {

void GroupWord::append_reduced(std::span<const Letter> raw) {
  for (const Letter& l : raw) {
    if (l.gen < 1)
      throw UsageError("generator index must be positive, got " + std::to_string(l.gen));
    if (l.sign != 1 && l.sign != -1)
      throw UsageError("letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  out.append_reduced(rhs.letters_);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out; // reversal of a reduced word is reduced
}

GroupWord GroupWord::pow(long long n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  if (n < 0) n = -n;
  GroupWord out;
  for (long long i = 0; i < n; ++i) out = out * base;
  return out;
}

GroupWord GroupWord::conjugate_by(const GroupWord& h) const {
  return h.inverse() * *this * h;
}

std::string GroupWord::key() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (l.gen > 127)
      throw ResourceError("word key supports at most 127 generators");
    s.push_back(static_cast<char>(((l.gen - 1) << 1) | (l.sign < 0 ? 1 : 0)));
  }
  return s;
}

GroupWord commutator(const GroupWord& u, const GroupWord& v) {
  return u.inverse() * v.inverse() * u * v;
}

ExponentVector exponent_vector(const GroupWord& w, int num_generators) {
  ExponentVector ev;
  ev.by_gen.assign(static_cast<size_t>(num_generators), 0);
  for (const Letter& l : w.letters()) {
    if (l.gen > num_generators)
      throw UsageError("generator index " + std::to_string(l.gen) + " out of range");
    ev.by_gen[static_cast<size_t>(l.gen - 1)] += l.sign;
    ev.total += l.sign;
  }
  return ev;
}

namespace {

[[noreturn]] void syntax_error(const std::string& text, size_t pos, const std::string& what) {
  throw UsageError("word syntax error at position " + std::to_string(pos) + ": " + what +
                   " (input: \"" + text + "\")");
}

} // namespace

GroupWord parse_word(const std::string& text, int num_generators) {
  std::vector<Letter> letters;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t tok_start = i;
    if (text[i] == 'e') {
      ++i;
      if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
        syntax_error(text, tok_start, "unexpected character after 'e'");
      continue;
    }
    if (text[i] != 'a')
      syntax_error(text, i, std::string("expected 'a<k>' or 'e', found '") + text[i] + "'");
    ++i;
    size_t num_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start)
      syntax_error(text, num_start, "expected generator index after 'a'");
    long gen = std::strtol(text.substr(num_start, i - num_start).c_str(), nullptr, 10);
    if (gen < 1 || gen > num_generators)
      throw UsageError("generator a" + std::to_string(gen) + " out of range 1.." +
                       std::to_string(num_generators));
    long long exp = 1;
    if (i < n && text[i] == '\'') {
      exp = -1;
      ++i;
    } else if (i < n && text[i] == '^') {
      ++i;
      size_t exp_start = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == exp_start || (i == exp_start + 1 && !std::isdigit(static_cast<unsigned char>(text[exp_start]))))
        syntax_error(text, exp_start, "expected integer exponent after '^'");
      exp = std::strtoll(text.substr(exp_start, i - exp_start).c_str(), nullptr, 10);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      syntax_error(text, i, std::string("unexpected character '") + text[i] + "'");
    int sign = exp < 0 ? -1 : 1;
    for (long long r = 0; r < (exp < 0 ? -exp : exp); ++r)
      letters.push_back(Letter{static_cast<int>(gen), sign});
  }
  return GroupWord(std::span<const Letter>(letters));
}

GroupWord parse_word(const std::string& text, const GroupConfig& cfg) {
  return parse_word(text, cfg.d);
}

std::string format_word(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'a';
    out += std::to_string(l.gen);
    if (l.sign < 0) out += '\'';
  }
  return out;
}

Vertex parse_vertex(const std::string& text, int d) {
  Vertex v;
  if (text.empty()) return v;
  if (d <= 9 && text.find(',') == std::string::npos) {
    for (size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw UsageError("vertex letter at position " + std::to_string(i) + " is not a digit");
      int x = c - '0';
      if (x < 1 || x > d)
        throw UsageError("vertex letter " + std::to_string(x) + " out of range 1.." +
                         std::to_string(d));
      v.push_back(x);
    }
    return v;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty())
      throw UsageError("empty component in vertex \"" + text + "\"");
    int x = std::atoi(part.c_str());
    if (x < 1 || x > d)
      throw UsageError("vertex letter " + std::to_string(x) + " out of range 1.." +
                       std::to_string(d));
    v.push_back(x);
  }
  return v;
}

std::string format_vertex(const Vertex& v, int d) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (d > 9 && i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace branchlab
