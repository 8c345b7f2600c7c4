#include "yetter/grp/catalog.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "yetter/limits.hpp"

namespace yetter::grp {

namespace {

using Coords = std::vector<int>;

struct CoordSystem {
  std::vector<int> radix;

  std::size_t size() const {
    std::size_t n = 1;
    for (int r : radix) {
      n *= static_cast<std::size_t>(r);
      if (n > limits().group_order_cap) {
        throw CapExceeded("requested group exceeds order cap " + std::to_string(limits().group_order_cap));
      }
    }
    return n;
  }
  Coords decode(std::size_t idx) const {
    Coords c(radix.size());
    for (std::size_t k = radix.size(); k-- > 0;) {
      c[k] = static_cast<int>(idx % static_cast<std::size_t>(radix[k]));
      idx /= static_cast<std::size_t>(radix[k]);
    }
    return c;
  }
  Element encode(const Coords& c) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < radix.size(); ++k) {
      const int r = radix[k];
      idx = idx * static_cast<std::size_t>(r) + static_cast<std::size_t>(((c[k] % r) + r) % r);
    }
    return static_cast<Element>(idx);
  }
};

GroupPtr build(const CoordSystem& cs, const std::function<Coords(const Coords&, const Coords&)>& mul,
               const std::function<std::string(const Coords&)>& label, const std::vector<Coords>& gens) {
  const std::size_t n = cs.size();
  std::vector<Coords> decoded(n);
  for (std::size_t i = 0; i < n; ++i) decoded[i] = cs.decode(i);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = cs.encode(mul(decoded[a], decoded[b]));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = label(decoded[i]);
  std::vector<Element> g;
  for (const auto& c : gens) g.push_back(cs.encode(c));
  return FiniteGroup::from_table(n, table, 0, std::move(g), std::move(labels), Validation::Sampled);
}

std::string tuple_label(const Coords& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return s + ")";
}

void require_modulus(int m) {
  if (m < 2) throw PreconditionError("modulus must be at least 2, got " + std::to_string(m));
}

std::string d4_label(int a, int b) {
  std::string s = a ? "x" : "";
  if (b == 1) s += "y";
  if (b > 1) s += "y" + std::to_string(b);
  return s.empty() ? "e" : s;
}

}  // namespace

GroupPtr cyclic(int m) {
  if (m == 1) {
    const std::vector<Element> table{0};
    return FiniteGroup::from_table(1, table, 0, {}, {"0"});
  }
  return abelian({m});
}

GroupPtr abelian(const std::vector<int>& moduli) {
  if (moduli.empty()) throw PreconditionError("abelian group needs at least one modulus");
  for (int m : moduli) require_modulus(m);
  CoordSystem cs{moduli};
  std::vector<Coords> gens;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    Coords g(moduli.size(), 0);
    g[k] = 1;
    gens.push_back(g);
  }
  auto mul = [](const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
  };
  auto label = [&](const Coords& c) { return moduli.size() == 1 ? std::to_string(c[0]) : tuple_label(c); };
  return build(cs, mul, label, gens);
}

namespace {

GroupPtr heisenberg_impl(int n, int m, int central_modulus) {
  if (n < 1) throw PreconditionError("heisenberg needs n >= 1");
  require_modulus(m);
  const auto sn = static_cast<std::size_t>(n);
  CoordSystem cs;
  cs.radix.assign(2 * sn, m);
  cs.radix.push_back(central_modulus);
  auto mul = [sn](const Coords& x, const Coords& y) {
    Coords z(x.size());
    long dot = 0;
    for (std::size_t k = 0; k < sn; ++k) dot += static_cast<long>(x[k]) * y[sn + k];
    for (std::size_t k = 0; k < 2 * sn; ++k) z[k] = x[k] + y[k];
    z[2 * sn] = static_cast<int>(x[2 * sn] + y[2 * sn] + dot);
    return z;
  };
  std::vector<Coords> gens;
  for (std::size_t k = 0; k < 2 * sn; ++k) {
    Coords g(2 * sn + 1, 0);
    g[k] = 1;
    gens.push_back(g);
  }
  return build(cs, mul, tuple_label, gens);
}

}  // namespace

GroupPtr heisenberg(int n, int m) { return heisenberg_impl(n, m, m); }

GroupPtr heisenberg_quotient(int n, int m, int modulus) {
  require_modulus(m);
  if (modulus < 1 || m % modulus != 0) {
    throw PreconditionError("quotient modulus " + std::to_string(modulus) + " does not divide " +
                            std::to_string(m));
  }
  if (modulus == 1) {
    std::vector<int> moduli(2 * static_cast<std::size_t>(n), m);
    return abelian(moduli);
  }
  return heisenberg_impl(n, m, modulus);
}

GroupPtr unitriangular4(int m) {
  require_modulus(m);
  CoordSystem cs{{m, m, m, m, m, m}};
  // (a12, a23, a34, a13, a24, a14)
  auto mul = [](const Coords& a, const Coords& b) {
    return Coords{a[0] + b[0],
                  a[1] + b[1],
                  a[2] + b[2],
                  a[3] + b[3] + a[0] * b[1],
                  a[4] + b[4] + a[1] * b[2],
                  a[5] + b[5] + a[0] * b[4] + a[3] * b[2]};
  };
  return build(cs, mul, tuple_label,
               {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
}

GroupPtr dihedral4() {
  CoordSystem cs{{2, 4}};
  auto mul = [](const Coords& p, const Coords& q) {
    return Coords{p[0] + q[0], (q[0] ? -p[1] : p[1]) + q[1]};
  };
  auto label = [](const Coords& c) { return d4_label(c[0], c[1]); };
  return build(cs, mul, label, {{1, 0}, {0, 1}});
}

GroupPtr d4_semidirect_z4() {
  // (a, b, k) stands for x^a y^b t^k with t x^a y^b t^-1 = x^a y^(a + b).
  CoordSystem cs{{2, 4, 4}};
  auto mul = [](const Coords& p, const Coords& q) {
    // t^k acts on x^c y^d as x^c y^(k c + d).
    const int c = q[0];
    const int d = q[1] + p[2] * q[0];
    return Coords{p[0] + c, (c ? -p[1] : p[1]) + d, p[2] + q[2]};
  };
  auto label = [](const Coords& c) {
    std::string s = d4_label(c[0], c[1]);
    if (c[2] == 0) return s;
    if (s == "e") s.clear();
    return s + "t" + (c[2] > 1 ? std::to_string(c[2]) : "");
  };
  return build(cs, mul, label, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

GroupPtr wreath(int m, int k) {
  require_modulus(m);
  require_modulus(k);
  const auto sk = static_cast<std::size_t>(k);
  CoordSystem cs;
  cs.radix.assign(sk, m);
  cs.radix.push_back(k);
  // (v, s)(w, t) = (v + s.w, s + t) where s shifts coordinates cyclically.
  auto mul = [sk, k](const Coords& p, const Coords& q) {
    Coords r(sk + 1);
    const auto s = static_cast<std::size_t>(((p[sk] % k) + k) % k);
    for (std::size_t i = 0; i < sk; ++i) r[i] = p[i] + q[(i + sk - s) % sk];
    r[sk] = p[sk] + q[sk];
    return r;
  };
  Coords base(sk + 1, 0);
  base[0] = 1;
  Coords shift(sk + 1, 0);
  shift[sk] = 1;
  return build(cs, mul, tuple_label, {base, shift});
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) throw PreconditionError("direct product of no factors");
  if (factors.size() == 1) return factors.front();
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > limits().group_order_cap) throw CapExceeded("direct product exceeds group order cap");
  }
  CoordSystem cs;
  for (const auto& f : factors) cs.radix.push_back(static_cast<int>(f->order()));
  auto mul = [&](const Coords& a, const Coords& b) {
    Coords c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      c[k] = static_cast<int>(factors[k]->mul(static_cast<Element>(a[k]), static_cast<Element>(b[k])));
    }
    return c;
  };
  auto label = [&](const Coords& c) {
    std::string s = "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ",";
      s += factors[k]->label(static_cast<Element>(c[k]));
    }
    return s + ")";
  };
  // Factor identities need not be element 0 for imported groups, so build the
  // table directly instead of relying on coordinate zero.
  std::vector<Coords> decoded(n);
  for (std::size_t i = 0; i < n; ++i) decoded[i] = cs.decode(i);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = cs.encode(mul(decoded[a], decoded[b]));
  Coords id;
  for (const auto& f : factors) id.push_back(static_cast<int>(f->identity()));
  std::vector<Element> gens;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (Element s : factors[k]->generators()) {
      Coords g = id;
      g[k] = static_cast<int>(s);
      gens.push_back(cs.encode(g));
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = label(decoded[i]);
  return FiniteGroup::from_table(n, table, cs.encode(id), std::move(gens), std::move(labels),
                                 Validation::Sampled);
}

namespace {

int parse_int(const std::string& key, std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("parameter " + key + " is not an integer: " + std::string(text));
  }
  return v;
}

GroupPtr construct_single(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string family(spec.substr(0, colon));
  std::map<std::string, std::string> params;
  if (colon != std::string_view::npos) {
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw PreconditionError("expected key=value in group name: " + item);
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw PreconditionError("group '" + family + "' needs parameter " + key);
    const int v = parse_int(key, it->second);
    params.erase(it);
    return v;
  };
  auto finish = [&](GroupPtr g) {
    if (!params.empty()) {
      throw PreconditionError("unknown parameter '" + params.begin()->first + "' for " + family);
    }
    return g;
  };

  if (family == "cyclic") return finish(cyclic(take("m")));
  if (family == "abelian") {
    auto it = params.find("m");
    if (it == params.end()) throw PreconditionError("abelian needs m=m1xm2x...");
    std::vector<int> moduli;
    std::stringstream ss(it->second);
    std::string part;
    while (std::getline(ss, part, 'x')) moduli.push_back(parse_int("m", part));
    params.erase(it);
    return finish(abelian(moduli));
  }
  if (family == "heisenberg") {
    const int n = take("n");
    return finish(heisenberg(n, take("m")));
  }
  if (family == "heisenberg_quotient") {
    const int n = take("n");
    const int m = take("m");
    return finish(heisenberg_quotient(n, m, take("N")));
  }
  if (family == "unitriangular4") return finish(unitriangular4(take("m")));
  if (family == "wreath") {
    const int m = take("m");
    return finish(wreath(m, take("k")));
  }
  if (family == "dihedral4") return finish(dihedral4());
  if (family == "d4_semidirect_z4") return finish(d4_semidirect_z4());
  throw PreconditionError("unknown group family '" + family + "'");
}

}  // namespace

GroupPtr construct_named(std::string_view spec) {
  std::vector<GroupPtr> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto star = spec.find('*', start);
    const auto part = spec.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    if (part.empty()) throw PreconditionError("empty factor in group name");
    factors.push_back(construct_single(part));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return direct_product(factors);
}

}  // namespace yetter::grp
