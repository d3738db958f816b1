#include "spinetorsion/torsion.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace spinetorsion {

namespace {

using PMat = std::vector<std::vector<UPoly>>;

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw SpineError(ErrorCode::InvalidArgument, "bad " + what + ": '" + s + "'");
  return v;
}

template <class F>
std::string value_string(const F& v) {
  return v.to_string();
}

template <class F>
TorsionReport run(const BranchedSpine& spine, const SpiderAnchors& anchors, const Representation& rep,
                  bool sign_refined, bool auto_basis, std::uint64_t seed) {
  TorsionReport out;
  auto tc = twisted_complex<F>(spine, anchors, generator_images<F>(rep, spine.num_edges()));
  out.twisted_betti = homology_dims(tc);
  out.acyclic = std::all_of(out.twisted_betti.begin(), out.twisted_betti.end(), [](int b) { return b == 0; });
  if (!out.acyclic && !auto_basis)
    throw SpineError(ErrorCode::NotAcyclicNoBasis,
                     "twisted homology is nonzero; pass an explicit homology basis choice (auto)");
  std::optional<HomologyBases<F>> h;
  if (!out.acyclic) h = default_homology_bases(tc);
  out.homology_basis = out.acyclic ? "none" : "auto";
  const HomologyBases<F>* hp = h ? &*h : nullptr;
  if (sign_refined) {
    Representation triv;
    auto untwisted = twisted_complex<Rational>(spine, anchors, generator_images<Rational>(triv, spine.num_edges()));
    auto o = default_homology_bases(untwisted);
    out.value = value_string(sign_refined_torsion0(tc, hp, untwisted, o, seed));
    out.sign_fixed = true;
  } else {
    out.value = value_string(torsion0(tc, hp, seed).up_to_sign());
  }
  return out;
}

std::pair<UPoly, int> laurent_parts(const RatFunc& x) {
  if (x.den().terms().size() != 1)
    throw SpineError(ErrorCode::InvalidArgument, "expected a Laurent polynomial, got " + x.to_string());
  const auto& [dm, dc] = *x.den().terms().begin();
  const int shift = dm.empty() ? 0 : -dm[0];
  std::vector<mpq_class> c(x.num().degree_in(0) + 1, 0);
  for (const auto& [m, a] : x.num().terms()) {
    if (m.size() > 1) throw SpineError(ErrorCode::InvalidArgument, "expected one variable");
    c[m.empty() ? 0 : m[0]] = mpq_class(a, dc);
  }
  return {UPoly(std::move(c)), shift};
}

// Polynomial matrix from Laurent entries, each column multiplied by a power
// of t so that every entry is a polynomial.
PMat column_shifted(const Matrix<RatFunc>& m) {
  PMat out(m.rows(), std::vector<UPoly>(m.cols()));
  for (int j = 0; j < m.cols(); ++j) {
    std::vector<std::pair<UPoly, int>> parts;
    int low = 0;
    for (int i = 0; i < m.rows(); ++i) {
      parts.push_back(laurent_parts(m(i, j)));
      if (!parts.back().first.is_zero()) low = std::min(low, parts.back().second);
    }
    for (int i = 0; i < m.rows(); ++i)
      if (!parts[i].first.is_zero()) out[i][j] = parts[i].first * UPoly::x_pow(parts[i].second - low);
  }
  return out;
}

// Product of the invariant factors of an r x c matrix over Q[t]; zero when
// the rank is below r.
UPoly pid_order(PMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  UPoly prod(1);
  for (int k = 0; k < rows; ++k) {
    auto place_min = [&](bool whole) {
      int bi = -1, bj = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (!whole && i != k && j != k) continue;
          if (a[i][j].is_zero()) continue;
          if (bi < 0 || a[i][j].degree() < a[bi][bj].degree()) bi = i, bj = j;
        }
      if (bi < 0) return false;
      std::swap(a[k], a[bi]);
      for (auto& row : a) std::swap(row[k], row[bj]);
      return true;
    };
    if (!place_min(true)) return UPoly(0);
    while (true) {
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (a[i][k].is_zero()) continue;
        UPoly q, r;
        divmod(a[i][k], a[k][k], q, r);
        for (int j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (!r.is_zero()) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (a[k][j].is_zero()) continue;
        UPoly q, r;
        divmod(a[k][j], a[k][k], q, r);
        for (int i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (!r.is_zero()) clean = false;
      }
      if (clean) break;
      place_min(false);
    }
    prod *= a[k][k];
  }
  return prod;
}

}  // namespace

RepSpec RepSpec::parse(const std::string& text) {
  RepSpec r;
  if (text == "trivial") return r;
  if (text == "free-abelian") {
    r.kind = Kind::FreeAbelian;
    return r;
  }
  if (text.rfind("cyclic:", 0) == 0) {
    r.kind = Kind::Cyclic;
    std::string rest = text.substr(7);
    auto colon = rest.find(':');
    r.order = static_cast<int>(parse_long(rest.substr(0, colon), "cyclic order"));
    if (r.order < 1) throw SpineError(ErrorCode::InvalidArgument, "cyclic order must be positive");
    if (colon != std::string::npos) {
      std::string chr = rest.substr(colon + 1);
      if (chr != "auto") {
        std::vector<long> ks;
        std::stringstream ss(chr);
        std::string item;
        while (std::getline(ss, item, ',')) ks.push_back(parse_long(item, "character value"));
        if (ks.empty()) throw SpineError(ErrorCode::InvalidArgument, "empty character");
        r.character = ks;
      }
    }
    return r;
  }
  throw SpineError(ErrorCode::InvalidArgument,
                   "unknown representation '" + text + "' (expected trivial, free-abelian or cyclic:N[:CHAR])");
}

std::string RepSpec::to_string() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::FreeAbelian:
      return "free-abelian";
    case Kind::Cyclic: {
      std::string s = "cyclic:" + std::to_string(order);
      if (character) {
        s += ":";
        for (std::size_t i = 0; i < character->size(); ++i) s += (i ? "," : "") + std::to_string((*character)[i]);
      }
      return s;
    }
  }
  return "";
}

Representation make_representation(const GroupData& g, const RepSpec& rep) {
  switch (rep.kind) {
    case RepSpec::Kind::Trivial:
      return trivial_representation(g);
    case RepSpec::Kind::FreeAbelian:
      return free_abelian_representation(g);
    case RepSpec::Kind::Cyclic:
      return cyclic_representation(g, rep.order, rep.character);
  }
  return trivial_representation(g);
}

TorsionReport compute_torsion(const BranchedSpine& spine, const RepSpec& spec, bool sign_refined, bool auto_basis,
                              std::uint64_t seed) {
  CellComplexX x = build_complex(spine);
  GroupData g = presentation(x, spine);
  SpiderAnchors anchors = spider_anchors(spine, x, g);
  Representation rep = make_representation(g, spec);
  TorsionReport out;
  switch (rep.kind) {
    case Representation::Kind::Trivial:
      out = run<Rational>(spine, anchors, rep, sign_refined, auto_basis, seed);
      out.field = "Q";
      break;
    case Representation::Kind::FreeAbelian: {
      out = run<RatFunc>(spine, anchors, rep, sign_refined, auto_basis, seed);
      std::string vars;
      for (int i = 0; i < rep.variables; ++i) vars += (i ? ",t" : "t") + std::to_string(i + 1);
      out.field = rep.variables ? "Q(" + vars + ")" : "Q";
      break;
    }
    case Representation::Kind::Cyclic:
      out = run<Cyclotomic>(spine, anchors, rep, sign_refined, auto_basis, seed);
      out.field = "Q(z_" + std::to_string(rep.order) + ")";
      break;
  }
  out.representation = rep.describe();
  out.surjective = rep.surjective;
  out.chi_spine = euler_characteristics(spine).spine;
  return out;
}

std::vector<long> first_free_character(const GroupData& g) {
  if (g.h1.free_rank == 0) throw SpineError(ErrorCode::InvalidArgument, "H1 has no free part");
  std::vector<long> k;
  for (const auto& c : g.free_coords) k.push_back(c[0].get_si());
  return k;
}

UPoly fox_alexander(const GroupData& g, const std::vector<long>& character) {
  const int E = g.generators, R = static_cast<int>(g.relators.size());
  if (E == 0) return UPoly(1);
  if (static_cast<int>(character.size()) != E)
    throw SpineError(ErrorCode::InvalidArgument, "character length does not match the generators");
  long gg = 0;
  for (long k : character) gg = std::gcd(gg, k);
  if (gg != 1) throw SpineError(ErrorCode::InvalidArgument, "character is not onto Z");
  if (R == 0) return UPoly(0);
  // Row r: Laurent entries as exponent -> coefficient.
  std::vector<std::vector<std::map<long, long>>> jac(R, std::vector<std::map<long, long>>(E));
  for (int r = 0; r < R; ++r) {
    long prefix = 0;
    for (int l : g.relators[r]) {
      const int e = std::abs(l) - 1;
      if (l > 0) {
        jac[r][e][prefix] += 1;
        prefix += character[e];
      } else {
        prefix -= character[e];
        jac[r][e][prefix] -= 1;
      }
    }
  }
  std::vector<std::vector<Poly>> rows(R, std::vector<Poly>(E));
  for (int r = 0; r < R; ++r) {
    long low = 0;
    bool any = false;
    for (const auto& m : jac[r])
      for (const auto& [x, c] : m)
        if (c != 0) low = any ? std::min(low, x) : x, any = true;
    for (int e = 0; e < E; ++e)
      for (const auto& [x, c] : jac[r][e])
        if (c != 0) rows[r][e] += Poly::variable(0, static_cast<int>(x - low)) * Poly(c);
  }
  const int k = E - 1;
  if (k == 0) return UPoly(1);
  if (k > R) return UPoly(0);
  UPoly acc(0);
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      for (int drop = 0; drop < E; ++drop) {
        Matrix<RatFunc> m(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0, c = 0; j < E; ++j) {
            if (j == drop) continue;
            m(i, c++) = RatFunc(rows[pick[i]][j]);
          }
        RatFunc d = det(m);
        if (d.is_zero()) continue;
        acc = gcd(acc, laurent_parts(d).first);
      }
      return;
    }
    for (int r = start; r < R; ++r) {
      pick[depth] = r;
      choose(r + 1, depth + 1);
    }
  };
  choose(0, 0);
  return normalize_laurent_unit(acc);
}

UPoly twisted_h1_order(const BranchedSpine& spine, const SpiderAnchors& anchors, const std::vector<long>& character) {
  const int E = spine.num_edges();
  if (static_cast<int>(character.size()) != E)
    throw SpineError(ErrorCode::InvalidArgument, "character length does not match the generators");
  std::vector<RatFunc> images;
  for (long k : character) images.push_back(RatFunc::laurent_monomial({static_cast<int>(k)}));
  auto tc = twisted_complex<RatFunc>(spine, anchors, images);
  PMat d1 = column_shifted(tc.d1.transpose());  // E x 1, same kernel as the row up to units
  PMat d2 = column_shifted(tc.d2);
  std::vector<UPoly> row(E);
  for (int e = 0; e < E; ++e) row[e] = d1[e][0];
  // Column operations bring the row to (g, 0, ..., 0); uinv tracks the inverse.
  PMat uinv(E, std::vector<UPoly>(E));
  for (int e = 0; e < E; ++e) uinv[e][e] = UPoly(1);
  while (true) {
    int p = -1, nonzero = 0;
    for (int e = 0; e < E; ++e)
      if (!row[e].is_zero()) {
        ++nonzero;
        if (p < 0 || row[e].degree() < row[p].degree()) p = e;
      }
    if (p < 0) throw SpineError(ErrorCode::InvalidArgument, "character is trivial on every generator");
    if (nonzero == 1) {
      std::swap(row[0], row[p]);
      std::swap(uinv[0], uinv[p]);
      break;
    }
    for (int j = 0; j < E; ++j) {
      if (j == p || row[j].is_zero()) continue;
      UPoly q, r;
      divmod(row[j], row[p], q, r);
      row[j] = r;
      for (int c = 0; c < E; ++c) uinv[p][c] += q * uinv[j][c];
    }
  }
  const int F = static_cast<int>(d2.empty() ? 0 : d2[0].size());
  PMat a(E - 1, std::vector<UPoly>(F));
  for (int i = 0; i < E; ++i)
    for (int f = 0; f < F; ++f) {
      UPoly s;
      for (int c = 0; c < E; ++c)
        if (!uinv[i][c].is_zero() && !d2[c][f].is_zero()) s += uinv[i][c] * d2[c][f];
      if (i == 0) {
        if (!s.is_zero()) throw SpineError(ErrorCode::InvalidArgument, "twisted boundaries do not compose to zero");
      } else {
        a[i - 1][f] = s;
      }
    }
  return normalize_laurent_unit(pid_order(a));
}

}  // namespace spinetorsion
