#include "qcat/quantaloid.hpp"

#include <algorithm>
#include <set>

namespace qcat {

bool Quantaloid::has_object(const std::string& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

const FiniteLattice& Quantaloid::hom(const std::string& x, const std::string& y) const {
  auto it = homs.find({x, y});
  if (it == homs.end())
    throw InputError("quantaloid: no hom lattice for " + x + " -> " + y);
  return it->second;
}

OneCell Quantaloid::cell(const std::string& x, const std::string& y, const std::string& e) const {
  hom(x, y).index(e);
  return {x, y, e};
}

OneCell Quantaloid::id_cell(const std::string& x) const {
  auto it = unit.find(x);
  if (it == unit.end()) throw InputError("quantaloid: no identity for object " + x);
  return cell(x, x, it->second);
}

OneCell Quantaloid::bottom(const std::string& x, const std::string& y) const {
  const FiniteLattice& l = hom(x, y);
  if (l.bottom() < 0) throw InputError("quantaloid: hom(" + x + "," + y + ") has no bottom");
  return {x, y, l.name(l.bottom())};
}

OneCell Quantaloid::top(const std::string& x, const std::string& y) const {
  const FiniteLattice& l = hom(x, y);
  if (l.top() < 0) throw InputError("quantaloid: hom(" + x + "," + y + ") has no top");
  return {x, y, l.name(l.top())};
}

bool Quantaloid::leq(const OneCell& a, const OneCell& b) const {
  if (a.src != b.src || a.dst != b.dst)
    throw InputError("quantaloid: comparing cells with different endpoints (" + a.src + "->" +
                     a.dst + " vs " + b.src + "->" + b.dst + ")");
  return hom(a.src, a.dst).leq(a.elt, b.elt);
}

OneCell Quantaloid::join(const std::string& x, const std::string& y,
                         const std::vector<OneCell>& cs) const {
  const FiniteLattice& l = hom(x, y);
  std::vector<int> xs;
  for (const OneCell& c : cs) {
    if (c.src != x || c.dst != y)
      throw InputError("quantaloid: join over mixed endpoints in hom(" + x + "," + y + ")");
    xs.push_back(l.index(c.elt));
  }
  int r = l.join(xs);
  if (r < 0) throw InputError("quantaloid: join does not exist in hom(" + x + "," + y + ")");
  return {x, y, l.name(r)};
}

OneCell Quantaloid::meet(const std::string& x, const std::string& y,
                         const std::vector<OneCell>& cs) const {
  const FiniteLattice& l = hom(x, y);
  std::vector<int> xs;
  for (const OneCell& c : cs) {
    if (c.src != x || c.dst != y)
      throw InputError("quantaloid: meet over mixed endpoints in hom(" + x + "," + y + ")");
    xs.push_back(l.index(c.elt));
  }
  int r = l.meet(xs);
  if (r < 0) throw InputError("quantaloid: meet does not exist in hom(" + x + "," + y + ")");
  return {x, y, l.name(r)};
}

OneCell Quantaloid::compose(const OneCell& g, const OneCell& f) const {
  if (f.dst != g.src)
    throw InputError("quantaloid: cannot compose " + g.src + "->" + g.dst + " after " + f.src +
                     "->" + f.dst);
  auto it = comp.find({f.src, f.dst, g.dst});
  if (it == comp.end())
    throw InputError("quantaloid: no composition table for " + f.src + " -> " + f.dst + " -> " +
                     g.dst);
  int gi = hom(g.src, g.dst).index(g.elt);
  int fi = hom(f.src, f.dst).index(f.elt);
  const auto& table = it->second;
  if (gi >= (int)table.size() || fi >= (int)table[gi].size())
    throw InputError("quantaloid: composition table for " + f.src + " -> " + f.dst + " -> " +
                     g.dst + " is not total");
  int r = table[gi][fi];
  const FiniteLattice& out = hom(f.src, g.dst);
  if (r < 0 || r >= out.size())
    throw InputError("quantaloid: composition table entry out of range");
  return {f.src, g.dst, out.name(r)};
}

OneCell Quantaloid::right_lift(const OneCell& h, const OneCell& g) const {
  if (h.dst != g.dst)
    throw InputError("quantaloid: right_lift needs cells with a common codomain");
  const std::string& x = h.src;
  const std::string& y = g.src;
  std::vector<OneCell> ok;
  for (const std::string& e : hom(x, y).elements()) {
    OneCell r{x, y, e};
    if (leq(compose(g, r), h)) ok.push_back(r);
  }
  return join(x, y, ok);
}

OneCell Quantaloid::right_extension(const OneCell& h, const OneCell& f) const {
  if (h.src != f.src)
    throw InputError("quantaloid: right_extension needs cells with a common domain");
  const std::string& y = f.dst;
  const std::string& z = h.dst;
  std::vector<OneCell> ok;
  for (const std::string& e : hom(y, z).elements()) {
    OneCell r{y, z, e};
    if (leq(compose(r, f), h)) ok.push_back(r);
  }
  return join(y, z, ok);
}

ValidationReport validate_quantaloid(const Quantaloid& q) {
  ValidationReport rep;
  auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

  std::set<std::string> seen;
  for (const std::string& x : q.objects)
    if (!seen.insert(x).second) bad("objects: duplicate name '" + x + "'");

  for (const std::string& x : q.objects)
    for (const std::string& y : q.objects) {
      auto it = q.homs.find({x, y});
      if (it == q.homs.end()) {
        bad("hom(" + x + "," + y + "): missing");
        continue;
      }
      for (auto& v : it->second.lattice_violations("hom(" + x + "," + y + ")")) bad(v);
    }
  for (const auto& [key, lat] : q.homs) {
    (void)lat;
    if (!q.has_object(key.first) || !q.has_object(key.second))
      bad("hom(" + key.first + "," + key.second + "): endpoints are not objects");
  }
  if (!rep.ok()) return rep;  // later checks assume total, well-formed homs

  for (const std::string& x : q.objects)
    for (const std::string& y : q.objects)
      for (const std::string& z : q.objects) {
        auto it = q.comp.find({x, y, z});
        const FiniteLattice& hg = q.hom(y, z);
        const FiniteLattice& hf = q.hom(x, y);
        const FiniteLattice& ho = q.hom(x, z);
        if (it == q.comp.end()) {
          bad("compose(" + x + "," + y + "," + z + "): missing table");
          continue;
        }
        const auto& t = it->second;
        if ((int)t.size() != hg.size()) {
          bad("compose(" + x + "," + y + "," + z + "): table has wrong outer size");
          continue;
        }
        for (int gi = 0; gi < hg.size(); ++gi) {
          if ((int)t[gi].size() != hf.size()) {
            bad("compose(" + x + "," + y + "," + z + "): row for '" + hg.name(gi) +
                "' has wrong size");
            break;
          }
          for (int fi = 0; fi < hf.size(); ++fi)
            if (t[gi][fi] < 0 || t[gi][fi] >= ho.size()) {
              bad("compose(" + x + "," + y + "," + z + "): entry (" + hg.name(gi) + "," +
                  hf.name(fi) + ") out of range");
            }
        }
      }
  for (const std::string& x : q.objects) {
    auto it = q.unit.find(x);
    if (it == q.unit.end())
      bad("unit(" + x + "): missing");
    else if (!q.hom(x, x).has(it->second))
      bad("unit(" + x + "): '" + it->second + "' is not an element of hom(" + x + "," + x + ")");
  }
  if (!rep.ok()) return rep;

  // Unit laws.
  for (const std::string& x : q.objects)
    for (const std::string& y : q.objects) {
      for (const std::string& e : q.hom(x, y).elements()) {
        OneCell f = q.cell(x, y, e);
        OneCell l = q.compose(q.id_cell(y), f);
        if (!(l == f))
          bad("unit law: id(" + y + ").'" + e + "' = '" + l.elt + "' in hom(" + x + "," + y +
              "), expected '" + e + "'");
        OneCell r = q.compose(f, q.id_cell(x));
        if (!(r == f))
          bad("unit law: '" + e + "'.id(" + x + ") = '" + r.elt + "' in hom(" + x + "," + y +
              "), expected '" + e + "'");
      }
    }

  // Associativity.
  for (const std::string& w : q.objects)
    for (const std::string& x : q.objects)
      for (const std::string& y : q.objects)
        for (const std::string& z : q.objects)
          for (const std::string& fe : q.hom(w, x).elements())
            for (const std::string& ge : q.hom(x, y).elements())
              for (const std::string& he : q.hom(y, z).elements()) {
                OneCell f = q.cell(w, x, fe), g = q.cell(x, y, ge), h = q.cell(y, z, he);
                OneCell a = q.compose(q.compose(h, g), f);
                OneCell b = q.compose(h, q.compose(g, f));
                if (!(a == b))
                  bad("associativity: ('" + he + "'.'" + ge + "').'" + fe + "' = '" + a.elt +
                      "' but '" + he + "'.('" + ge + "'.'" + fe + "') = '" + b.elt + "' in hom(" +
                      w + "," + z + ")");
              }

  // Join preservation, validated on binary joins and bottom in each argument.
  for (const std::string& x : q.objects)
    for (const std::string& y : q.objects)
      for (const std::string& z : q.objects) {
        const FiniteLattice& hf = q.hom(x, y);
        const FiniteLattice& hg = q.hom(y, z);
        for (const std::string& ge : hg.elements()) {
          OneCell g = q.cell(y, z, ge);
          OneCell gb = q.compose(g, q.bottom(x, y));
          if (!(gb == q.bottom(x, z)))
            bad("join preservation: '" + ge + "'.bottom = '" + gb.elt + "' in hom(" + x + "," +
                z + "), expected bottom");
          for (int i = 0; i < hf.size(); ++i)
            for (int j = i + 1; j < hf.size(); ++j) {
              OneCell fi = q.cell(x, y, hf.name(i)), fj = q.cell(x, y, hf.name(j));
              OneCell lhs = q.compose(g, q.join(x, y, {fi, fj}));
              OneCell rhs = q.join(x, z, {q.compose(g, fi), q.compose(g, fj)});
              if (!(lhs == rhs))
                bad("join preservation: '" + ge + "'.('" + hf.name(i) + "' v '" + hf.name(j) +
                    "') = '" + lhs.elt + "' but pointwise join is '" + rhs.elt + "' in hom(" +
                    x + "," + z + ")");
            }
        }
        for (const std::string& fe : hf.elements()) {
          OneCell f = q.cell(x, y, fe);
          OneCell bf = q.compose(q.bottom(y, z), f);
          if (!(bf == q.bottom(x, z)))
            bad("join preservation: bottom.'" + fe + "' = '" + bf.elt + "' in hom(" + x + "," +
                z + "), expected bottom");
          for (int i = 0; i < hg.size(); ++i)
            for (int j = i + 1; j < hg.size(); ++j) {
              OneCell gi = q.cell(y, z, hg.name(i)), gj = q.cell(y, z, hg.name(j));
              OneCell lhs = q.compose(q.join(y, z, {gi, gj}), f);
              OneCell rhs = q.join(x, z, {q.compose(gi, f), q.compose(gj, f)});
              if (!(lhs == rhs))
                bad("join preservation: ('" + hg.name(i) + "' v '" + hg.name(j) + "').'" + fe +
                    "' = '" + lhs.elt + "' but pointwise join is '" + rhs.elt + "' in hom(" + x +
                    "," + z + ")");
            }
        }
      }

  return rep;
}

Quantaloid op_quantaloid(const Quantaloid& q) {
  Quantaloid r;
  r.objects = q.objects;
  r.unit = q.unit;
  for (const auto& [key, lat] : q.homs) r.homs[{key.second, key.first}] = lat;
  // An op cell a -> b is a cell b -> a of q, and the op composite g.f of
  // g: b -> c after f: a -> b is the q-composite f.g of f: b -> a after
  // g: c -> b. Hence comp_op[{a,b,c}][g][f] = comp[{c,b,a}][f][g].
  for (const std::string& a : q.objects)
    for (const std::string& b : q.objects)
      for (const std::string& c : q.objects) {
        const auto& t_q = q.comp.at({c, b, a});
        int outer = q.hom(c, b).size();  // g in hom_op(b,c)
        int inner = q.hom(b, a).size();  // f in hom_op(a,b)
        std::vector<std::vector<int>> t(outer, std::vector<int>(inner, -1));
        for (int gi = 0; gi < outer; ++gi)
          for (int fi = 0; fi < inner; ++fi) t[gi][fi] = t_q[fi][gi];
        r.comp[{a, b, c}] = std::move(t);
      }
  return r;
}

}  // namespace qcat
