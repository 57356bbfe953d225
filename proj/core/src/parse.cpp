#include "ctxf/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace ctxf {

namespace {

constexpr double kPi = std::numbers::pi;

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

double parse_number(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw std::invalid_argument("bad number: " + s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s = strip(text);
  double sign = 1.0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    if (s[0] == '-') sign = -1.0;
    s.erase(0, 1);
  }
  auto pos = s.find("pi");
  if (pos == std::string::npos) return sign * parse_number(s);

  std::string head = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  if (!head.empty() && head.back() == '*') head.pop_back();
  double coef = head.empty() ? 1.0 : parse_number(head);
  double div = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/')
      throw std::invalid_argument("bad angle expression: " + text);
    div = parse_number(tail.substr(1));
    if (div == 0.0) throw std::invalid_argument("division by zero: " + text);
  }
  return sign * coef * kPi / div;
}

PureState parse_state(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad state spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  if (kind == "ghz") {
    int n = int(parse_number(strip(body)));
    return ghz_state(n);
  }
  if (kind == "diag") {
    auto parts = split(body, ',');
    if (parts.size() != 2)
      throw std::invalid_argument("diag spec needs THETA,PHI: " + spec);
    return diag_state(parse_angle(parts[0]), parse_angle(parts[1]));
  }
  if (kind == "amps") {
    auto pairs = split(body, ';');
    if (pairs.size() != 4)
      throw std::invalid_argument("amps spec needs 4 re,im pairs: " + spec);
    std::vector<Complex> amps;
    for (const auto& pr : pairs) {
      auto parts = split(pr, ',');
      if (parts.size() != 2)
        throw std::invalid_argument("bad amplitude pair: " + pr);
      amps.emplace_back(parse_number(strip(parts[0])),
                        parse_number(strip(parts[1])));
    }
    return pure_state_from_amplitudes(std::move(amps));
  }
  throw std::invalid_argument("unknown state spec: " + spec);
}

BlochBasis parse_basis(const std::string& spec) {
  std::string s = strip(spec);
  if (s == "x") return basis_x();
  if (s == "y") return basis_y();
  if (s == "z") return basis_z();
  if (s == "pi8") return basis_pi8();
  if (s == "5pi8") return basis_5pi8();
  if (s.rfind("bloch:", 0) == 0) {
    auto parts = split(s.substr(6), ',');
    if (parts.size() != 2)
      throw std::invalid_argument("bloch spec needs THETA,PHI: " + spec);
    return BlochBasis{parse_angle(parts[0]), parse_angle(parts[1])};
  }
  throw std::invalid_argument("unknown basis spec: " + spec);
}

BellScenario parse_scenario(const std::string& spec, int n_parties) {
  std::string s = strip(spec);
  if (s.rfind("bell:", 0) != 0)
    throw std::invalid_argument("scenario spec must start with \"bell:\": " + spec);
  auto party_specs = split(s.substr(5), ';');

  auto parse_party = [&](const std::string& text) {
    auto fields = split(text, ',');
    std::size_t k = 0;
    auto take_basis = [&]() -> BlochBasis {
      if (k >= fields.size())
        throw std::invalid_argument("party spec needs two bases: " + text);
      // "bloch:" tokens span two comma-separated fields.
      if (fields[k].rfind("bloch:", 0) == 0) {
        if (k + 1 >= fields.size())
          throw std::invalid_argument("truncated bloch spec: " + text);
        std::string token = fields[k] + "," + fields[k + 1];
        k += 2;
        return parse_basis(token);
      }
      return parse_basis(fields[k++]);
    };
    BellScenario::Party party{{take_basis(), take_basis()}, std::nullopt};
    if (k != fields.size())
      throw std::invalid_argument("trailing fields in party spec: " + text);
    return party;
  };

  BellScenario out;
  for (const auto& ps : party_specs) out.parties.push_back(parse_party(ps));
  if (int(out.parties.size()) == 1 && n_parties > 1)
    out.parties.assign(std::size_t(n_parties), out.parties[0]);
  if (int(out.parties.size()) != n_parties)
    throw std::invalid_argument("scenario party count does not match state");
  return out;
}

}  // namespace ctxf
