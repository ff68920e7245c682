#include "detrep/bpoly.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace detrep {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

double parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size()) {
    char ch = c.s[c.i];
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == 'e' ||
        ch == 'E' || ((ch == '+' || ch == '-') && c.i > start &&
                      (c.s[c.i - 1] == 'e' || c.s[c.i - 1] == 'E'))) {
      ++c.i;
    } else {
      break;
    }
  }
  if (c.i == start) throw MalformedTerm("expected a number at position " + std::to_string(start));
  double value = 0;
  auto res = std::from_chars(c.s.data() + start, c.s.data() + c.i, value);
  if (res.ec != std::errc() || res.ptr != c.s.data() + c.i)
    throw MalformedTerm("bad numeric literal '" + c.s.substr(start, c.i - start) + "'");
  // p/q rationals
  if (c.peek() == '/') {
    ++c.i;
    size_t dstart = c.i;
    while (c.i < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '.'))
      ++c.i;
    if (c.i == dstart) throw MalformedTerm("bad rational denominator");
    double den = 0;
    std::from_chars(c.s.data() + dstart, c.s.data() + c.i, den);
    if (den == 0) throw MalformedTerm("rational with zero denominator");
    value /= den;
  }
  return value;
}

// one factor: number | x1[^k] | x2[^k]
void parse_factor(Cursor& c, double& coeff, int& a1, int& a2) {
  char ch = c.peek();
  if (ch == 'x' || ch == 'X') {
    c.i++;
    if (c.i >= c.s.size() || (c.s[c.i] != '1' && c.s[c.i] != '2'))
      throw MalformedTerm("variable must be x1 or x2");
    int which = c.s[c.i] - '0';
    c.i++;
    int exp = 1;
    if (c.peek() == '^') {
      c.i++;
      c.skip_ws();
      size_t estart = c.i;
      while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
      if (c.i == estart) throw MalformedTerm("missing exponent after '^'");
      exp = std::stoi(c.s.substr(estart, c.i - estart));
    }
    (which == 1 ? a1 : a2) += exp;
  } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
    coeff *= parse_number(c);
  } else {
    throw MalformedTerm(std::string("unexpected character '") + ch + "'");
  }
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

BivariatePoly BivariatePoly::parse(const std::string& text, int max_degree) {
  Cursor c{text};
  std::map<std::pair<int, int>, double> terms;
  bool first = true;
  while (!c.done()) {
    double sign = 1.0;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1.0 : 1.0;
      c.i++;
    } else if (!first) {
      throw MalformedTerm("expected '+' or '-' between terms");
    }
    first = false;
    double coeff = sign;
    int a1 = 0, a2 = 0;
    bool any = false;
    while (true) {
      parse_factor(c, coeff, a1, a2);
      any = true;
      char nx = c.peek();
      if (nx == '*') {
        c.i++;
        continue;
      }
      // implicit product: a variable directly after a factor
      if (nx == 'x' || nx == 'X') continue;
      break;
    }
    if (!any) throw MalformedTerm("empty term");
    if (a1 + a2 > max_degree)
      throw DegreeOverflow("term degree " + std::to_string(a1 + a2) + " exceeds limit " +
                           std::to_string(max_degree));
    terms[{a1, a2}] += coeff;
  }
  if (terms.empty()) throw MalformedTerm("empty expression");

  double constant = 0.0;
  auto it = terms.find({0, 0});
  if (it != terms.end()) constant = it->second;
  if (std::abs(constant - 1.0) > 1e-12)
    throw NonMonicConstant("constant term is " + format_double(constant) + ", expected 1");

  int d = 0;
  for (const auto& [key, v] : terms)
    if (v != 0.0) d = std::max(d, key.first + key.second);
  if (d == 0) throw MalformedTerm("no nonconstant term survives; degree must be positive");

  Eigen::MatrixXd grid = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (const auto& [key, v] : terms) grid(key.first, key.second) = v;
  grid(0, 0) = 1.0;
  return BivariatePoly(d, std::move(grid));
}

BivariatePoly BivariatePoly::from_grid(const Eigen::MatrixXd& grid) {
  if (grid.rows() != grid.cols() || grid.rows() < 1)
    throw MalformedTerm("coefficient grid must be square and nonempty");
  if (std::abs(grid(0, 0) - 1.0) > 1e-8)
    throw NonMonicConstant("grid constant entry is not 1");
  const int n = static_cast<int>(grid.rows()) - 1;
  const double scale = std::max(1.0, grid.cwiseAbs().maxCoeff());
  int d = 0;
  for (int a1 = 0; a1 <= n; ++a1)
    for (int a2 = 0; a2 <= n; ++a2)
      if (std::abs(grid(a1, a2)) > 1e-12 * scale) d = std::max(d, a1 + a2);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d + 1, d + 1);
  for (int a1 = 0; a1 <= d; ++a1)
    for (int a2 = 0; a2 + a1 <= d; ++a2)
      if (a1 <= n && a2 <= n) out(a1, a2) = grid(a1, a2);
  out(0, 0) = 1.0;
  return BivariatePoly(d, std::move(out));
}

UnivariateSlice BivariatePoly::restrict_axis(int axis) const {
  if (axis != 1 && axis != 2) throw DimensionMismatch("axis must be 1 or 2");
  UnivariateSlice s;
  s.coeffs.resize(degree_ + 1);
  for (int k = 0; k <= degree_; ++k)
    s.coeffs[k] = (axis == 1) ? grid_(k, 0) : grid_(0, k);
  while (s.coeffs.size() > 1 && s.coeffs.back() == 0.0) s.coeffs.pop_back();
  return s;
}

double BivariatePoly::evaluate(double x1, double x2) const {
  double acc = 0.0;
  for (int a1 = degree_; a1 >= 0; --a1) {
    double row = 0.0;
    for (int a2 = degree_; a2 >= 0; --a2) row = row * x2 + grid_(a1, a2);
    acc = acc * x1 + row;
  }
  return acc;
}

MixedCoefficients BivariatePoly::mixed_coefficient_vector() const {
  MixedCoefficients m;
  for (int a1 = 1; a1 <= degree_ - 1; ++a1) m.primary.push_back(grid_(a1, 1));
  for (int a2 = 2; a2 <= degree_ - 1; ++a2) m.primary.push_back(grid_(1, a2));
  for (int a1 = 1; a1 < degree_; ++a1)
    for (int a2 = 1; a1 + a2 <= degree_; ++a2) m.grid[{a1, a2}] = grid_(a1, a2);
  return m;
}

std::string BivariatePoly::serialize() const {
  std::ostringstream out;
  out << "1";
  // fixed emission order: ascending total degree, then ascending a1
  for (int total = 1; total <= degree_; ++total) {
    for (int a1 = 0; a1 <= total; ++a1) {
      int a2 = total - a1;
      double v = grid_(a1, a2);
      if (v == 0.0) continue;
      out << (v < 0 ? "-" : "+");
      out << format_double(std::abs(v));
      if (a1 > 0) out << "*x1" << (a1 > 1 ? "^" + std::to_string(a1) : "");
      if (a2 > 0) out << "*x2" << (a2 > 1 ? "^" + std::to_string(a2) : "");
    }
  }
  return out.str();
}

std::string BivariatePoly::to_json_text() const {
  std::ostringstream out;
  out << "{\"degree\": " << degree_ << ", \"coeffs\": [";
  for (int a1 = 0; a1 <= degree_; ++a1) {
    out << (a1 ? ", [" : "[");
    for (int a2 = 0; a2 <= degree_; ++a2)
      out << (a2 ? ", " : "") << format_double(grid_(a1, a2));
    out << "]";
  }
  out << "]}";
  return out.str();
}

BivariatePoly BivariatePoly::from_json_text(const std::string& text) {
  // minimal hand parser to keep the core library free of the JSON dependency;
  // the CLI accepts the same format through its JSON front end
  auto fail = [] { throw MalformedTerm("bad polynomial JSON"); };
  size_t dpos = text.find("\"degree\"");
  size_t cpos = text.find("\"coeffs\"");
  if (dpos == std::string::npos || cpos == std::string::npos) fail();
  size_t colon = text.find(':', dpos);
  int d = std::stoi(text.substr(colon + 1));
  if (d < 0 || d > 32) fail();
  Eigen::MatrixXd grid = Eigen::MatrixXd::Zero(d + 1, d + 1);
  size_t i = text.find('[', cpos);
  if (i == std::string::npos) fail();
  ++i;
  for (int a1 = 0; a1 <= d; ++a1) {
    i = text.find('[', i);
    if (i == std::string::npos) fail();
    ++i;
    for (int a2 = 0; a2 <= d; ++a2) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      size_t end;
      grid(a1, a2) = std::stod(text.substr(i), &end);
      i += end;
    }
    i = text.find(']', i);
    if (i == std::string::npos) fail();
    ++i;
  }
  return from_grid(grid);
}

double BivariatePoly::max_relative_gap(const BivariatePoly& a, const BivariatePoly& b) {
  int n = std::max(a.degree_, b.degree_);
  double worst = 0.0;
  for (int a1 = 0; a1 <= n; ++a1) {
    for (int a2 = 0; a1 + a2 <= n; ++a2) {
      double ca = (a1 <= a.degree_ && a2 <= a.degree_) ? a.grid_(a1, a2) : 0.0;
      double cb = (a1 <= b.degree_ && a2 <= b.degree_) ? b.grid_(a1, a2) : 0.0;
      worst = std::max(worst, std::abs(ca - cb) / (1.0 + std::abs(cb)));
    }
  }
  return worst;
}

}  // namespace detrep
