#include "qcat/enriched.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qcat {

const std::string& VCategory::ext(const std::string& x) const {
  auto it = extent.find(x);
  if (it == extent.end()) throw InputError("category: unknown object '" + x + "'");
  return it->second;
}

OneCell VCategory::hom_cell(const std::string& x, const std::string& y) const {
  auto it = hom.find({x, y});
  if (it == hom.end())
    throw InputError("category: no hom entry for (" + x + "," + y + ")");
  return base->cell(ext(y), ext(x), it->second);
}

bool VCategory::operator==(const VCategory& o) const {
  if (!same_base(*this, o)) return false;
  return objects == o.objects && extent == o.extent && hom == o.hom;
}

bool same_base(const VCategory& a, const VCategory& b) {
  if (!a.base || !b.base) return false;
  return a.base == b.base || *a.base == *b.base;
}

const std::string& VFunctor::apply(const std::string& x) const {
  auto it = map.find(x);
  if (it == map.end()) throw InputError("functor: no image for object '" + x + "'");
  return it->second;
}

OneCell VDistributor::at(const std::string& a, const std::string& b) const {
  auto it = mat.find({a, b});
  if (it == mat.end())
    throw InputError("distributor: no entry for (" + a + "," + b + ")");
  return src.base->cell(src.ext(b), dst.ext(a), it->second);
}

Weight Weight::unary(VDistributor p) {
  Weight w;
  w.chain.push_back(std::move(p));
  return w;
}

Weight Weight::of(std::vector<VDistributor> chain) {
  if (chain.empty()) throw InputError("weight: a chain-built weight needs at least one link");
  Weight w;
  w.chain = std::move(chain);
  return w;
}

Weight Weight::empty(VCategory anchor) {
  Weight w;
  w.anchor_ = std::move(anchor);
  return w;
}

const VCategory& Weight::near() const {
  if (!chain.empty()) return chain.front().dst;
  if (!anchor_) throw InputError("weight: empty weight without an anchor");
  return *anchor_;
}

const VCategory& Weight::far() const {
  if (!chain.empty()) return chain.back().src;
  if (!anchor_) throw InputError("weight: empty weight without an anchor");
  return *anchor_;
}

bool Weight::operator==(const Weight& o) const {
  if (chain != o.chain) return false;
  if (chain.empty()) return near() == o.near();
  return true;
}

ValidationReport validate_vcategory(const VCategory& a) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  if (!a.base) {
    bad("category: no base quantaloid");
    return rep;
  }
  const Quantaloid& q = *a.base;
  std::set<std::string> seen;
  for (const auto& x : a.objects) {
    if (!seen.insert(x).second) bad("category: duplicate object '" + x + "'");
    auto it = a.extent.find(x);
    if (it == a.extent.end())
      bad("category: object '" + x + "' has no extent");
    else if (!q.has_object(it->second))
      bad("category: extent '" + it->second + "' of '" + x + "' is not a base object");
  }
  if (!rep.ok()) return rep;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      auto it = a.hom.find({x, y});
      if (it == a.hom.end()) {
        bad("category: missing hom entry (" + x + "," + y + ")");
        continue;
      }
      if (!q.hom(a.ext(y), a.ext(x)).has(it->second))
        bad("category: hom(" + x + "," + y + ") = '" + it->second +
            "' is not an element of hom(" + a.ext(y) + "," + a.ext(x) + ")");
    }
  if (!rep.ok()) return rep;
  for (const auto& x : a.objects) {
    if (!q.leq(q.id_cell(a.ext(x)), a.hom_cell(x, x)))
      bad("category: identity above law fails at '" + x + "': id(" + a.ext(x) +
          ") is not below hom(" + x + "," + x + ")");
  }
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects) {
        OneCell lhs = q.compose(a.hom_cell(x, y), a.hom_cell(y, z));
        if (!q.leq(lhs, a.hom_cell(x, z)))
          bad("category: composition law fails at (" + x + "," + y + "," + z + "): hom(" + x +
              "," + y + ").hom(" + y + "," + z + ") = '" + lhs.elt + "' is not below hom(" + x +
              "," + z + ")");
      }
  return rep;
}

ValidationReport validate_vfunctor(const VFunctor& f) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  if (!same_base(f.dom, f.cod)) {
    bad("functor: domain and codomain live over different bases");
    return rep;
  }
  for (auto& v : validate_vcategory(f.dom).violations) bad("functor domain: " + v);
  for (auto& v : validate_vcategory(f.cod).violations) bad("functor codomain: " + v);
  if (!rep.ok()) return rep;
  for (const auto& x : f.dom.objects) {
    auto it = f.map.find(x);
    if (it == f.map.end()) {
      bad("functor: no image for object '" + x + "'");
      continue;
    }
    if (!f.cod.has_object(it->second)) {
      bad("functor: image '" + it->second + "' of '" + x + "' is not a codomain object");
      continue;
    }
    if (f.dom.ext(x) != f.cod.ext(it->second))
      bad("functor: extent not preserved at '" + x + "' (" + f.dom.ext(x) + " vs " +
          f.cod.ext(it->second) + ")");
  }
  if (!rep.ok()) return rep;
  const Quantaloid& q = *f.dom.base;
  for (const auto& x : f.dom.objects)
    for (const auto& y : f.dom.objects)
      if (!q.leq(f.dom.hom_cell(x, y), f.cod.hom_cell(f.apply(x), f.apply(y))))
        bad("functor: hom inequality fails at (" + x + "," + y + ")");
  return rep;
}

ValidationReport validate_vdistributor(const VDistributor& p) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  if (!same_base(p.src, p.dst)) {
    bad("distributor: endpoints live over different bases");
    return rep;
  }
  for (auto& v : validate_vcategory(p.src).violations) bad("distributor source: " + v);
  for (auto& v : validate_vcategory(p.dst).violations) bad("distributor target: " + v);
  if (!rep.ok()) return rep;
  const Quantaloid& q = *p.src.base;
  for (const auto& a : p.dst.objects)
    for (const auto& b : p.src.objects) {
      auto it = p.mat.find({a, b});
      if (it == p.mat.end()) {
        bad("distributor: missing entry (" + a + "," + b + ")");
        continue;
      }
      if (!q.hom(p.src.ext(b), p.dst.ext(a)).has(it->second))
        bad("distributor: entry (" + a + "," + b + ") = '" + it->second +
            "' is not an element of hom(" + p.src.ext(b) + "," + p.dst.ext(a) + ")");
    }
  if (!rep.ok()) return rep;
  for (const auto& a : p.dst.objects)
    for (const auto& a2 : p.dst.objects)
      for (const auto& b : p.src.objects)
        if (!q.leq(q.compose(p.dst.hom_cell(a2, a), p.at(a, b)), p.at(a2, b)))
          bad("distributor: left action fails at (" + a2 + "," + a + "," + b + ")");
  for (const auto& a : p.dst.objects)
    for (const auto& b : p.src.objects)
      for (const auto& b2 : p.src.objects)
        if (!q.leq(q.compose(p.at(a, b), p.src.hom_cell(b, b2)), p.at(a, b2)))
          bad("distributor: right action fails at (" + a + "," + b + "," + b2 + ")");
  return rep;
}

ValidationReport validate_weight(const Weight& w) {
  ValidationReport rep;
  for (size_t i = 0; i < w.chain.size(); ++i) {
    auto sub = validate_vdistributor(w.chain[i]);
    for (auto& v : sub.violations)
      rep.violations.push_back("weight link " + std::to_string(i + 1) + ": " + v);
    if (i + 1 < w.chain.size() && !(w.chain[i + 1].dst == w.chain[i].src))
      rep.violations.push_back("weight: link " + std::to_string(i + 2) +
                               " does not end where link " + std::to_string(i + 1) + " starts");
  }
  return rep;
}

ValidationReport validate_presheaf(const Presheaf& p, const VCategory& a) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  const Quantaloid& q = *a.base;
  if (!q.has_object(p.extent)) {
    bad("presheaf: extent '" + p.extent + "' is not a base object");
    return rep;
  }
  for (const auto& x : a.objects) {
    auto it = p.col.find(x);
    if (it == p.col.end()) {
      bad("presheaf: missing column at '" + x + "'");
      continue;
    }
    if (!q.hom(p.extent, a.ext(x)).has(it->second))
      bad("presheaf: column at '" + x + "' = '" + it->second + "' is not an element of hom(" +
          p.extent + "," + a.ext(x) + ")");
  }
  if (!rep.ok()) return rep;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      OneCell cy = q.cell(p.extent, a.ext(y), p.col.at(y));
      OneCell cx = q.cell(p.extent, a.ext(x), p.col.at(x));
      if (!q.leq(q.compose(a.hom_cell(x, y), cy), cx))
        bad("presheaf: action fails at (" + x + "," + y + ")");
    }
  return rep;
}

VCategory star_category(std::shared_ptr<const Quantaloid> base, const std::string& v) {
  if (!base->has_object(v)) throw InputError("star: '" + v + "' is not a base object");
  VCategory a;
  a.base = std::move(base);
  a.objects = {"*"};
  a.extent["*"] = v;
  a.hom[{"*", "*"}] = a.base->id_cell(v).elt;
  return a;
}

VFunctor identity_functor(const VCategory& a) {
  VFunctor f;
  f.dom = a;
  f.cod = a;
  for (const auto& x : a.objects) f.map[x] = x;
  return f;
}

VFunctor compose_functor(const VFunctor& g, const VFunctor& f) {
  if (!(f.cod == g.dom)) throw InputError("functor composition: middle categories differ");
  VFunctor h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& x : f.dom.objects) h.map[x] = g.apply(f.apply(x));
  return h;
}

VFunctor object_functor(const VCategory& a_cat, const std::string& a) {
  VFunctor f;
  f.dom = star_category(a_cat.base, a_cat.ext(a));
  f.cod = a_cat;
  f.map["*"] = a;
  return f;
}

VDistributor identity_dist(const VCategory& a) {
  VDistributor p;
  p.src = a;
  p.dst = a;
  p.mat = a.hom;
  return p;
}

VDistributor compose_dist(const VDistributor& p, const VDistributor& q) {
  if (!(p.src == q.dst))
    throw InputError("distributor composition: middle categories differ");
  const Quantaloid& base = *p.src.base;
  VDistributor r;
  r.src = q.src;
  r.dst = p.dst;
  for (const auto& a : p.dst.objects)
    for (const auto& c : q.src.objects) {
      std::vector<OneCell> terms;
      for (const auto& b : p.src.objects) terms.push_back(base.compose(p.at(a, b), q.at(b, c)));
      r.mat[{a, c}] = base.join(q.src.ext(c), p.dst.ext(a), terms).elt;
    }
  return r;
}

VDistributor compose_weight(const Weight& w) {
  if (w.arity() == 0) return identity_dist(w.near());
  VDistributor acc = w.chain.front();
  for (size_t i = 1; i < w.chain.size(); ++i) acc = compose_dist(acc, w.chain[i]);
  return acc;
}

VDistributor restrict_dist(const VDistributor& p, const VFunctor& f, const VFunctor& g) {
  if (!(f.cod == p.dst)) throw InputError("restriction: first functor must land in dst");
  if (!(g.cod == p.src)) throw InputError("restriction: second functor must land in src");
  VDistributor r;
  r.src = g.dom;
  r.dst = f.dom;
  for (const auto& a : f.dom.objects)
    for (const auto& b : g.dom.objects) r.mat[{a, b}] = p.mat.at({f.apply(a), g.apply(b)});
  return r;
}

VDistributor conjoint(const VFunctor& f) {
  VDistributor r;
  r.src = f.cod;
  r.dst = f.dom;
  for (const auto& a : f.dom.objects)
    for (const auto& x : f.cod.objects) r.mat[{a, x}] = f.cod.hom.at({f.apply(a), x});
  return r;
}

VDistributor companion(const VFunctor& f) {
  VDistributor r;
  r.src = f.dom;
  r.dst = f.cod;
  for (const auto& x : f.cod.objects)
    for (const auto& a : f.dom.objects) r.mat[{x, a}] = f.cod.hom.at({x, f.apply(a)});
  return r;
}

bool dist_leq(const VDistributor& p, const VDistributor& q) {
  if (!(p.src == q.src) || !(p.dst == q.dst))
    throw InputError("distributor comparison: endpoints differ");
  const Quantaloid& base = *p.src.base;
  for (const auto& a : p.dst.objects)
    for (const auto& b : p.src.objects)
      if (!base.leq(p.at(a, b), q.at(a, b))) return false;
  return true;
}

bool two_cell_holds(const Weight& w, const VDistributor& q) {
  return dist_leq(compose_weight(w), q);
}

namespace {

// Iterate assignments over the given object pools; calls fn for each tuple.
void for_tuples(const std::vector<const std::vector<std::string>*>& pools,
                const std::function<void(const std::vector<size_t>&)>& fn) {
  for (const auto* pool : pools)
    if (pool->empty()) return;
  std::vector<size_t> idx(pools.size(), 0);
  while (true) {
    fn(idx);
    size_t k = 0;
    while (k < pools.size()) {
      if (++idx[k] < pools[k]->size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == pools.size()) break;
  }
}

}  // namespace

VDistributor lift_dist(const VDistributor& q, const Weight& w) {
  if (!(q.dst == w.near()))
    throw InputError("lift: weight is not anchored at the distributor's target");
  if (w.arity() == 0) return q;
  const Quantaloid& base = *q.src.base;
  const VCategory& c = q.src;
  const VCategory& f = w.far();
  const size_t n = w.arity();

  VDistributor r;
  r.src = c;
  r.dst = f;
  for (const auto& y : f.objects)
    for (const auto& x : c.objects) r.mat[{y, x}] = base.top(c.ext(x), f.ext(y)).elt;

  std::vector<const std::vector<std::string>*> pools(n);
  for (size_t i = 0; i < n; ++i) pools[i] = &w.chain[i].dst.objects;

  for_tuples(pools, [&](const std::vector<size_t>& idx) {
    std::optional<OneCell> prefix;  // p1(a0,a1) . ... . p_{n-1}(a_{n-2},a_{n-1})
    for (size_t i = 1; i < n; ++i) {
      OneCell link = w.chain[i - 1].at((*pools[i - 1])[idx[i - 1]], (*pools[i])[idx[i]]);
      prefix = prefix ? base.compose(*prefix, link) : link;
    }
    const std::string& a0 = (*pools[0])[idx[0]];
    const std::string& alast = (*pools[n - 1])[idx[n - 1]];
    for (const auto& y : f.objects) {
      OneCell path = w.chain[n - 1].at(alast, y);
      if (prefix) path = base.compose(*prefix, path);
      for (const auto& x : c.objects) {
        OneCell cur = base.cell(c.ext(x), f.ext(y), r.mat.at({y, x}));
        OneCell step = base.right_lift(q.at(a0, x), path);
        r.mat[{y, x}] = base.meet(c.ext(x), f.ext(y), {cur, step}).elt;
      }
    }
  });
  return r;
}

VDistributor ext_dist(const VDistributor& q, const Weight& w) {
  if (!(q.src == w.far()))
    throw InputError("extension: weight's far end differs from the distributor's source");
  if (w.arity() == 0) return q;
  const Quantaloid& base = *q.src.base;
  const VCategory& d = q.dst;
  const VCategory& nearc = w.near();
  const size_t n = w.arity();

  VDistributor r;
  r.src = nearc;
  r.dst = d;
  for (const auto& a : d.objects)
    for (const auto& a0 : nearc.objects) r.mat[{a, a0}] = base.top(nearc.ext(a0), d.ext(a)).elt;

  // tuple positions 1..n: position i < n draws from chain[i].dst, the last
  // from chain[n-1].src
  std::vector<const std::vector<std::string>*> pools(n);
  for (size_t i = 0; i + 1 < n; ++i) pools[i] = &w.chain[i + 1].dst.objects;
  pools[n - 1] = &w.chain[n - 1].src.objects;

  for_tuples(pools, [&](const std::vector<size_t>& idx) {
    std::optional<OneCell> suffix;  // p2(a1,a2) . ... . pn(a_{n-1},an)
    for (size_t i = 1; i < n; ++i) {
      OneCell link = w.chain[i].at((*pools[i - 1])[idx[i - 1]], (*pools[i])[idx[i]]);
      suffix = suffix ? base.compose(*suffix, link) : link;
    }
    const std::string& a1 = (*pools[0])[idx[0]];
    const std::string& an = (*pools[n - 1])[idx[n - 1]];
    for (const auto& a0 : nearc.objects) {
      OneCell path = w.chain[0].at(a0, a1);
      if (suffix) path = base.compose(path, *suffix);
      for (const auto& a : d.objects) {
        OneCell cur = base.cell(nearc.ext(a0), d.ext(a), r.mat.at({a, a0}));
        OneCell step = base.right_extension(q.at(a, an), path);
        r.mat[{a, a0}] = base.meet(nearc.ext(a0), d.ext(a), {cur, step}).elt;
      }
    }
  });
  return r;
}

ColimitResult weighted_colimit(const Weight& w, const VFunctor& f) {
  if (!(w.near() == f.dom))
    throw InputError("weighted colimit: weight is not anchored at the diagram's domain");
  const VCategory& x_cat = f.cod;
  const VCategory& far = w.far();
  const Quantaloid& base = *x_cat.base;
  VDistributor lift = lift_dist(conjoint(f), w);

  ColimitResult res;
  bool total = true;
  std::map<std::string, std::string> chosen;
  for (const auto& y : far.objects) {
    std::vector<std::string> hits;
    for (const auto& e : x_cat.objects) {
      if (x_cat.ext(e) != far.ext(y)) continue;
      bool match = true;
      for (const auto& x : x_cat.objects)
        if (x_cat.hom.at({e, x}) != lift.mat.at({y, x})) {
          match = false;
          break;
        }
      if (match) hits.push_back(e);
    }
    if (hits.empty())
      total = false;
    else
      chosen[y] = hits.front();
    res.witnesses[y] = std::move(hits);
  }
  if (total) {
    VFunctor c;
    c.dom = far;
    c.cod = x_cat;
    c.map = std::move(chosen);
    for (const auto& y : far.objects)
      for (const auto& z : far.objects)
        if (!base.leq(far.hom_cell(y, z), x_cat.hom_cell(c.apply(y), c.apply(z))))
          throw std::logic_error("weighted colimit produced a non-functorial witness");
    res.functor = std::move(c);
  }
  return res;
}

ColimitResult weighted_limit(const Weight& w, const VFunctor& f) {
  if (!(w.far() == f.dom))
    throw InputError("weighted limit: weight's far end differs from the diagram's domain");
  auto ob = op_base(f.dom);
  ColimitResult dual = weighted_colimit(op_weight(w, ob), op_vfunctor(f, ob));
  ColimitResult res;
  res.witnesses = dual.witnesses;
  if (dual.total()) {
    VFunctor c;
    c.dom = w.near();
    c.cod = f.cod;
    c.map = dual.functor->map;
    res.functor = std::move(c);
  }
  return res;
}

VDistributor presheaf_dist(const Presheaf& p, const VCategory& a) {
  VDistributor d;
  d.src = star_category(a.base, p.extent);
  d.dst = a;
  for (const auto& x : a.objects) {
    auto it = p.col.find(x);
    if (it == p.col.end()) throw InputError("presheaf: missing column at '" + x + "'");
    d.mat[{x, "*"}] = it->second;
  }
  return d;
}

Presheaf dist_presheaf(const VDistributor& d) {
  if (d.src.objects.size() != 1)
    throw InputError("presheaf extraction: source is not a one-object category");
  const std::string& o = d.src.objects.front();
  Presheaf p;
  p.extent = d.src.ext(o);
  for (const auto& x : d.dst.objects) p.col[x] = d.mat.at({x, o});
  return p;
}

Presheaf representable(const VCategory& a, const std::string& obj) {
  Presheaf p;
  p.extent = a.ext(obj);
  for (const auto& x : a.objects) p.col[x] = a.hom.at({x, obj});
  return p;
}

Presheaf restrict_presheaf(const Presheaf& p, const VFunctor& f) {
  Presheaf r;
  r.extent = p.extent;
  for (const auto& x : f.dom.objects) r.col[x] = p.col.at(f.apply(x));
  return r;
}

std::shared_ptr<const Quantaloid> op_base(const VCategory& a) {
  return std::make_shared<Quantaloid>(op_quantaloid(*a.base));
}

VCategory op_vcategory(const VCategory& a, std::shared_ptr<const Quantaloid> ob) {
  VCategory r;
  r.base = std::move(ob);
  r.objects = a.objects;
  r.extent = a.extent;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) r.hom[{x, y}] = a.hom.at({y, x});
  return r;
}

VCategory op_vcategory(const VCategory& a) { return op_vcategory(a, op_base(a)); }

VFunctor op_vfunctor(const VFunctor& f, std::shared_ptr<const Quantaloid> ob) {
  VFunctor r;
  r.dom = op_vcategory(f.dom, ob);
  r.cod = op_vcategory(f.cod, ob);
  r.map = f.map;
  return r;
}

VDistributor op_vdistributor(const VDistributor& p, std::shared_ptr<const Quantaloid> ob) {
  VDistributor r;
  r.src = op_vcategory(p.dst, ob);
  r.dst = op_vcategory(p.src, ob);
  for (const auto& [key, val] : p.mat) r.mat[{key.second, key.first}] = val;
  return r;
}

Weight op_weight(const Weight& w, std::shared_ptr<const Quantaloid> ob) {
  if (w.arity() == 0) return Weight::empty(op_vcategory(w.near(), ob));
  std::vector<VDistributor> chain;
  for (auto it = w.chain.rbegin(); it != w.chain.rend(); ++it)
    chain.push_back(op_vdistributor(*it, ob));
  return Weight::of(std::move(chain));
}

}  // namespace qcat
