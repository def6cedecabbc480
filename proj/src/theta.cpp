#include "wlift/theta.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "wlift/enumerate.hpp"

namespace wlift {

Integer TernaryLattice::determinant() const { return to_integer(wlift::determinant(to_rational(gram))); }

TernaryLattice trace_zero_lattice(const QLattice& order) {
  const Algebra& alg = order.algebra();
  std::vector<Quaternion> gens{Quaternion::scalar(alg, 1)};
  for (const auto& b : order.basis()) gens.push_back(Rational(2) * b);
  const auto basis = QLattice::from_generators(alg, gens).basis();

  IntMatrix traces(4, 1);
  for (std::size_t k = 0; k < 4; ++k) traces(k, 0) = to_integer(basis[k].trace());
  const IntMatrix kernel = integer_left_kernel(traces);
  if (kernel.rows() != 3) throw InternalError("trace_zero_lattice: kernel of the trace is not rank 3");

  TernaryLattice out;
  for (std::size_t r = 0; r < 3; ++r) {
    Quaternion x = Quaternion::scalar(alg, 0);
    for (std::size_t k = 0; k < 4; ++k) x = x + Rational(kernel(r, k)) * basis[k];
    out.basis.push_back(x);
  }
  const RatMatrix g = norm_gram(out.basis);
  out.gram = IntMatrix(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) out.gram(r, s) = to_integer(g(r, s));
  return out;
}

QSeries::QSeries(long bound, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (bound < 0 || coeffs_.size() != static_cast<std::size_t>(bound + 1))
    throw UsageError("QSeries: coefficient count does not match bound");
}

QSeries QSeries::truncated(long bound) const {
  if (bound > this->bound()) throw UsageError("QSeries::truncated: bound exceeds known precision");
  return QSeries(bound, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + bound + 1));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const long bound = std::min(a.bound(), b.bound());
  QSeries out(bound);
  for (long n = 0; n <= bound; ++n) out[n] = a[n] + b[n];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const long bound = std::min(a.bound(), b.bound());
  QSeries out(bound);
  for (long n = 0; n <= bound; ++n) out[n] = a[n] - b[n];
  return out;
}

QSeries operator*(const Integer& c, const QSeries& a) {
  QSeries out(a.bound());
  for (long n = 0; n <= a.bound(); ++n) out[n] = c * a[n];
  return out;
}

std::string QSeries::pretty() const {
  std::ostringstream os;
  bool first = true;
  for (long n = 0; n <= bound(); ++n) {
    const Integer& c = coeffs_[static_cast<std::size_t>(n)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'q';
      if (n != 1) os << '^' << n;
    }
  }
  if (!first) os << " + ";
  os << "O(q^" << bound() + 1 << ')';
  return os.str();
}

QSeries theta_series(const TernaryLattice& lattice, long bound) {
  if (bound < 0) throw UsageError("theta_series: negative bound");
  return QSeries(bound, count_by_value(to_rational(lattice.gram), bound, /*reduce=*/false));
}

QSeries theta_series_box(const IntMatrix& gram, long bound, long box) {
  QSeries out(bound);
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      for (long z = -box; z <= box; ++z) {
        const long v[3] = {x, y, z};
        Integer q = 0;
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) q += gram(r, s) * v[r] * v[s];
        if (q <= bound) out[q.get_si()] += 1;
      }
  return out;
}

std::array<long, 6> canonical_gram_key(const IntMatrix& gram) {
  // Every vector of norm <= the largest diagonal of an LLL basis: the
  // lexicographically least basis has diagonal equal to the successive
  // minima, which that bound covers in dimension 3.
  const ReducedGram red = lll_reduce(to_rational(gram));
  Rational bound = 0;
  for (std::size_t i = 0; i < 3; ++i) bound = std::max(bound, red.gram(i, i));

  struct Vec {
    std::array<long, 3> c;
    long norm;
  };
  std::vector<Vec> vecs;
  enumerate_short_vectors(to_rational(gram), bound, [&](const std::vector<Integer>& c, const Rational& v) {
    if (sgn(v) == 0) return true;
    vecs.push_back({{c[0].get_si(), c[1].get_si(), c[2].get_si()}, to_integer(v).get_si()});
    return true;
  });
  std::sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) {
    return a.norm != b.norm ? a.norm < b.norm : a.c < b.c;
  });

  long g[3][3];
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) g[r][s] = gram(r, s).get_si();
  auto pair = [&](const Vec& u, const Vec& v) {
    long s = 0;
    for (int r = 0; r < 3; ++r)
      for (int t = 0; t < 3; ++t) s += u.c[r] * g[r][t] * v.c[t];
    return s;
  };
  auto det = [](const Vec& a, const Vec& b, const Vec& c) {
    return a.c[0] * (b.c[1] * c.c[2] - b.c[2] * c.c[1]) - a.c[1] * (b.c[0] * c.c[2] - b.c[2] * c.c[0]) +
           a.c[2] * (b.c[0] * c.c[1] - b.c[1] * c.c[0]);
  };

  std::array<long, 6> best;
  best.fill(std::numeric_limits<long>::max());
  for (const auto& v1 : vecs) {
    if (v1.norm > best[0]) break;
    for (const auto& v2 : vecs) {
      if (v1.norm == best[0] && v2.norm > best[1]) break;
      for (const auto& v3 : vecs) {
        if (v1.norm == best[0] && v2.norm == best[1] && v3.norm > best[2]) break;
        const long d = det(v1, v2, v3);
        if (d != 1 && d != -1) continue;
        std::array<long, 6> key{v1.norm, v2.norm, v3.norm, pair(v1, v2), pair(v1, v3), pair(v2, v3)};
        if (key < best) best = key;
      }
    }
  }
  if (best[0] == std::numeric_limits<long>::max()) throw InternalError("canonical_gram_key: no basis found");
  return best;
}

std::string to_text(const QSeries& s, const std::vector<std::string>& header) {
  std::ostringstream os;
  for (const auto& h : header) os << "# " << h << '\n';
  for (long n = 0; n <= s.bound(); ++n)
    if (s[n] != 0) os << n << ' ' << s[n] << '\n';
  return os.str();
}

QSeries series_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  long bound = -1;
  std::vector<std::pair<long, Integer>> terms;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("bound=");
      if (pos != std::string::npos) bound = std::stol(line.substr(pos + 6));
      continue;
    }
    std::istringstream ls(line);
    long n;
    std::string c;
    if (!(ls >> n >> c)) throw UsageError("q-expansion text: malformed line '" + line + "'");
    terms.emplace_back(n, Integer(c));
  }
  if (bound < 0) throw UsageError("q-expansion text: missing bound= header");
  QSeries out(bound);
  long last = -1;
  for (const auto& [n, c] : terms) {
    if (n <= last || n > bound) throw UsageError("q-expansion text: exponents must ascend within the bound");
    out[n] = c;
    last = n;
  }
  return out;
}

nlohmann::ordered_json to_json(const QSeries& s) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (long n = 0; n <= s.bound(); ++n)
    if (s[n] != 0) coeffs[std::to_string(n)] = s[n].get_str();
  return {{"bound", s.bound()}, {"coeffs", coeffs}};
}

QSeries series_from_json(const nlohmann::json& j) {
  if (!j.contains("bound") || !j.contains("coeffs")) throw UsageError("q-expansion JSON: needs bound and coeffs");
  QSeries out(j.at("bound").get<long>());
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const long n = std::stol(key);
    if (n < 0 || n > out.bound()) throw UsageError("q-expansion JSON: exponent " + key + " outside the bound");
    out[n] = value.is_string() ? Integer(value.get<std::string>()) : Integer(value.get<long>());
  }
  return out;
}

}  // namespace wlift
