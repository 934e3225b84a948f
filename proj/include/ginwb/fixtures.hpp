#pragma once

#include <fstream>

#include "ginwb/syzygy.hpp"

namespace ginwb {
namespace fixtures {

/// The three reference parameterizations, one form per line (the on-disk
/// .param format mirrors these strings verbatim).

inline const std::vector<std::string>& aux1_lines() {
  static const std::vector<std::string> v = {
      "t^10+t^9*u+t*u^9+u^10",
      "7*t^10+101*t^8*u^2+355*t^5*u^5+999*u^10",
      "29*t^10+99*t^3*u^7+67*t^2*u^8+83*u^10",
      "61*t^10+79*t^5*u^5+t^3*u^7+901*t*u^9+53*u^10",
      "741*t^10+t^8*u^2+t^7*u^3+t^6*u^4+t^4*u^6+t^2*u^8+9001*u^10",
  };
  return v;
}

inline const std::vector<std::string>& aux2_lines() {
  static const std::vector<std::string> v = {
      "-t^9*u^2-t^8*u^3+t^6*u^5+2*t^5*u^6-2*t^3*u^8+t*u^10",
      "-t^8*u^3+2*t^7*u^4-3*t^6*u^5-t^5*u^6+2*t^4*u^7+3*t^3*u^8+t^2*u^9-t*u^10-u^11",
      "t^11+t^9*u^2-2*t^8*u^3+2*t^7*u^4-t^6*u^5-3*t^4*u^7-t^3*u^8+t^2*u^9+2*t*u^10",
      "t^11-t^8*u^3+2*t^7*u^4-t^6*u^5-t^4*u^7-3*t^3*u^8-2*t^2*u^9+t*u^10+u^11",
      "-t^10*u+t^7*u^4+3*t^4*u^7+t^3*u^8-t^2*u^9-t*u^10",
  };
  return v;
}

inline const std::vector<std::string>& aux3_lines() {
  static const std::vector<std::string> v = {
      "2*t^10*u-t^9*u^2-4*t^7*u^4-t^6*u^5+2*t^5*u^6-t^4*u^7+3*t^3*u^8+t^2*u^9-t*u^10",
      "-2*t^11+t^10*u+2*t^9*u^2+3*t^8*u^3-2*t^7*u^4-t^6*u^5-t^5*u^6+t^4*u^7+2*t^3*u^8-"
      "2*t^2*u^9-t*u^10+u^11",
      "-2*t^10*u+t^9*u^2+t^8*u^3+t^7*u^4+t^6*u^5-t^5*u^6-t*u^10",
      "-t^8*u^3-2*t^7*u^4-t^6*u^5+t^5*u^6+4*t^4*u^7+t^3*u^8-2*t^2*u^9-t*u^10",
      "2*t^10*u-t^9*u^2+3*t^8*u^3-2*t^7*u^4-4*t^6*u^5-t^5*u^6+2*t^3*u^8+t^2*u^9",
  };
  return v;
}

inline int fixture_degree(const std::string& name) {
  if (name == "aux1") return 10;
  if (name == "aux2" || name == "aux3") return 11;
  throw ginwb_error("unknown fixture '" + name + "'");
}

inline const std::vector<std::string>& fixture_lines(const std::string& name) {
  if (name == "aux1") return aux1_lines();
  if (name == "aux2") return aux2_lines();
  if (name == "aux3") return aux3_lines();
  throw ginwb_error("unknown fixture '" + name + "'");
}

inline std::vector<Form2> parse_lines(const std::vector<std::string>& lines, int degree,
                                      const PrimeField& F) {
  std::vector<Form2> out;
  for (const auto& s : lines) out.push_back(parse_form(s, degree, F));
  return out;
}

inline std::vector<Form2> fixture_forms(const std::string& name, const PrimeField& F) {
  return parse_lines(fixture_lines(name), fixture_degree(name), F);
}

/// One form per line, '#' comments and blank lines skipped. The degree is
/// the common degree of the parsed forms.
inline std::pair<std::vector<Form2>, int> load_param_file(const std::string& path,
                                                          const PrimeField& F) {
  std::ifstream in(path);
  if (!in) throw ginwb_error("cannot open parameterization file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (!blank) lines.push_back(line);
  }
  if (lines.empty()) throw ginwb_error("empty parameterization file " + path);
  // detect the degree from the first line
  Ring R2 = Ring::grevlex({"t", "u"}, F.modulus());
  Poly p = parse_poly(lines[0], R2);
  if (p.zero()) throw ginwb_error("zero first form in " + path);
  int d = p.t.front().m.e[0] + p.t.front().m.e[1];
  return {parse_lines(lines, d, F), d};
}

/// The formal syzygy constraint systems attached to the degree-11 fixtures.
inline std::vector<SyzygyRelation> fixture_relations(const std::string& name,
                                                     const PrimeField& F) {
  auto c = [&](const char* s, int d) { return parse_form(s, d, F); };
  if (name == "aux2") {
    return {
        {{c("t^4", 4), c("t^3*u", 4), c("t^2*u^2", 4), c("t*u^3", 4), c("u^4", 4)}},
        {{c("u^3", 3), c("t*u^2", 3), Form2(), c("t^2*u", 3), c("t^3", 3)}},
        {{Form2(), c("t*u", 2), c("u^2-t^2", 2), c("t^2", 2), c("u^2", 2)}},
        {{c("t^2", 2), c("t^2+t*u+u^2", 2), c("t*u", 2), c("u^2", 2), c("t^2-u^2", 2)}},
    };
  }
  if (name == "aux3") {
    return {
        {{c("t^4", 4), c("t^3*u", 4), c("t^2*u^2", 4), c("t*u^3", 4), c("u^4", 4)}},
        {{c("u^4", 4), c("t*u^3", 4), c("t^4+t^2*u^2", 4), c("t^3*u", 4), c("t^4", 4)}},
        {{Form2(), c("t*u", 2), c("u^2-t^2", 2), c("t^2", 2), c("u^2", 2)}},
        {{c("t", 1), Form2(), c("t+u", 1), c("t-u", 1), c("u", 1)}},
    };
  }
  throw ginwb_error("no relation system for fixture '" + name + "'");
}

/// Reference initial ideal of the aux2 kernel.
inline MonomialIdeal aux2_initial_ideal() {
  return parse_ideal_literal("Borel(x2^4, x1*x2^2*x3, x0^3)", 5);
}

/// Computed initial ideal of the aux3 kernel (21 generators, not
/// Borel-fixed). The published rendition prints x0^2*x3^3 where the
/// computation gives x0^2*x3^2; the remaining twenty generators agree.
inline MonomialIdeal aux3_initial_ideal() {
  return parse_ideal_literal(
      "x0^2*x2, x0^3, x2^3*x3, x2^4, x1*x2^2*x3, x1*x2^3, x1^2*x2*x3, x1^2*x2^2, x1^3*x2, "
      "x0*x2^2*x3, x0*x2^3, x0*x1*x2*x3, x0*x1*x2^2, x0*x1^2*x3, x0*x1^2*x2, x0*x1^3, "
      "x0^2*x3^2, x0^2*x1*x3, x0^2*x1^2, x0*x1*x3^3, x1^3*x3^3",
      5);
}

inline MonomialIdeal aux3_initial_ideal_printed() {
  return parse_ideal_literal(
      "x0^2*x2, x0^3, x0*x1^2*x2, x0^2*x3^3, x2^3*x3, x1*x2^2*x3, x0*x2^2*x3, x1^2*x2*x3, "
      "x0*x1*x2*x3, x0*x1^2*x3, x0^2*x1*x3, x2^4, x1*x2^3, x0*x2^3, x1^2*x2^2, x0*x1*x2^2, "
      "x1^3*x2, x0*x1^3, x0^2*x1^2, x0*x1*x3^3, x1^3*x3^3",
      5);
}

/// Writes the .param files for the three fixtures into a directory.
inline void write_param_files(const std::string& dir) {
  for (const std::string name : {"aux1", "aux2", "aux3"}) {
    std::ofstream out(dir + "/" + name + ".param");
    for (const auto& l : fixture_lines(name)) out << l << "\n";
  }
}

}  // namespace fixtures
}  // namespace ginwb
