#include "qcat/builders.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace qcat {

bool FiniteCategory::has_object(const std::string& x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

const FiniteArrow& FiniteCategory::arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return a;
  throw InputError("category: unknown arrow '" + name + "'");
}

const std::string& FiniteCategory::compose(const std::string& g, const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw InputError("category: no composite for (" + g + "," + f + ")");
  return it->second;
}

std::vector<std::string> FiniteCategory::hom(const std::string& x, const std::string& y) const {
  std::vector<std::string> out;
  for (const auto& a : arrows)
    if (a.src == x && a.dst == y) out.push_back(a.name);
  return out;
}

ValidationReport validate_category(const FiniteCategory& b) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  std::set<std::string> obj_seen, arr_seen;
  for (const auto& x : b.objects)
    if (!obj_seen.insert(x).second) bad("category: duplicate object '" + x + "'");
  for (const auto& a : b.arrows) {
    if (!arr_seen.insert(a.name).second) bad("category: duplicate arrow '" + a.name + "'");
    if (!b.has_object(a.src) || !b.has_object(a.dst))
      bad("category: arrow '" + a.name + "' has unknown endpoints");
  }
  if (!rep.ok()) return rep;
  for (const auto& x : b.objects) {
    auto it = b.id.find(x);
    if (it == b.id.end() || arr_seen.count(it->second) == 0) {
      bad("category: no identity arrow for '" + x + "'");
      continue;
    }
    const FiniteArrow& ia = b.arrow(it->second);
    if (ia.src != x || ia.dst != x)
      bad("category: identity of '" + x + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (const auto& [key, val] : b.comp) {
    if (arr_seen.count(key.first) == 0 || arr_seen.count(key.second) == 0 ||
        arr_seen.count(val) == 0) {
      bad("category: composite entry (" + key.first + "," + key.second + ") mentions unknown arrows");
      continue;
    }
    const FiniteArrow& g = b.arrow(key.first);
    const FiniteArrow& f = b.arrow(key.second);
    const FiniteArrow& h = b.arrow(val);
    if (f.dst != g.src)
      bad("category: composite entry (" + key.first + "," + key.second + ") is not composable");
    else if (h.src != f.src || h.dst != g.dst)
      bad("category: composite of (" + key.first + "," + key.second + ") has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (const auto& f : b.arrows)
    for (const auto& g : b.arrows)
      if (f.dst == g.src && b.comp.count({g.name, f.name}) == 0)
        bad("category: missing composite for (" + g.name + "," + f.name + ")");
  if (!rep.ok()) return rep;
  for (const auto& g : b.arrows) {
    if (b.compose(g.name, b.id.at(g.src)) != g.name)
      bad("category: right unit law fails at '" + g.name + "'");
    if (b.compose(b.id.at(g.dst), g.name) != g.name)
      bad("category: left unit law fails at '" + g.name + "'");
  }
  for (const auto& f : b.arrows)
    for (const auto& g : b.arrows) {
      if (f.dst != g.src) continue;
      for (const auto& h : b.arrows) {
        if (g.dst != h.src) continue;
        if (b.compose(h.name, b.compose(g.name, f.name)) !=
            b.compose(b.compose(h.name, g.name), f.name))
          bad("category: associativity fails at (" + f.name + "," + g.name + "," + h.name + ")");
      }
    }
  return rep;
}

FiniteCategory op_category(const FiniteCategory& b) {
  FiniteCategory r;
  r.objects = b.objects;
  for (const auto& a : b.arrows) r.arrows.push_back({a.name, a.dst, a.src});
  r.id = b.id;
  for (const auto& [key, val] : b.comp) r.comp[{key.second, key.first}] = val;
  return r;
}

FiniteCategory terminal_category() {
  FiniteCategory r;
  r.objects = {"*"};
  r.arrows = {{"id_*", "*", "*"}};
  r.id["*"] = "id_*";
  r.comp[{"id_*", "id_*"}] = "id_*";
  return r;
}

namespace {

std::string path_key(const std::string& src, const ArrowPath& p) {
  std::string k = src;
  k += '|';
  for (const auto& g : p) {
    k += g;
    k += '\x1f';
  }
  return k;
}

// Right-to-left join: the path {"f","g"} (f applied first) is named "g.f".
std::string path_name(const std::string& src, const ArrowPath& p) {
  if (p.empty()) return "id_" + src;
  std::string n;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (!n.empty()) n += '.';
    n += *it;
  }
  return n;
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

FiniteCategory category_from_presentation(
    const std::vector<std::string>& objects, const std::vector<FiniteArrow>& generators,
    const std::vector<std::pair<ArrowPath, ArrowPath>>& relations, size_t path_cap) {
  std::map<std::string, std::pair<std::string, std::string>> gen;  // name -> (src, dst)
  std::set<std::string> obj_seen(objects.begin(), objects.end());
  if (obj_seen.size() != objects.size())
    throw InputError("presentation: duplicate object names");
  for (const auto& g : generators) {
    if (obj_seen.count(g.src) == 0 || obj_seen.count(g.dst) == 0)
      throw InputError("presentation: generator '" + g.name + "' has unknown endpoints");
    if (!gen.emplace(g.name, std::make_pair(g.src, g.dst)).second)
      throw InputError("presentation: duplicate generator '" + g.name + "'");
  }

  // Every composable generator path of length <= path_cap, identities as
  // length-0 paths.
  std::vector<std::string> srcs, dsts;
  std::vector<ArrowPath> paths;
  std::map<std::string, size_t> index;
  auto add_node = [&](const std::string& s, const std::string& d, ArrowPath p) {
    index.emplace(path_key(s, p), paths.size());
    srcs.push_back(s);
    dsts.push_back(d);
    paths.push_back(std::move(p));
  };
  for (const auto& x : objects) add_node(x, x, {});
  size_t level_begin = 0;
  for (size_t len = 0; len < path_cap; ++len) {
    size_t level_end = paths.size();
    for (size_t i = level_begin; i < level_end; ++i)
      for (const auto& [gname, ends] : gen) {
        if (ends.first != dsts[i]) continue;
        ArrowPath p = paths[i];
        p.push_back(gname);
        add_node(srcs[i], ends.second, std::move(p));
        if (paths.size() > 50000)
          throw ResourceError("presentation: more than 50000 composable paths under the cap");
      }
    level_begin = level_end;
  }

  // Walk a relation side to find its endpoints.
  auto walk = [&](const ArrowPath& p) -> std::pair<std::string, std::string> {
    auto it = gen.find(p.front());
    if (it == gen.end()) throw InputError("presentation: relation mentions unknown generator '" + p.front() + "'");
    std::string s = it->second.first, d = it->second.second;
    for (size_t i = 1; i < p.size(); ++i) {
      auto jt = gen.find(p[i]);
      if (jt == gen.end()) throw InputError("presentation: relation mentions unknown generator '" + p[i] + "'");
      if (jt->second.first != d)
        throw InputError("presentation: relation path is not composable at '" + p[i] + "'");
      d = jt->second.second;
    }
    return {s, d};
  };

  UnionFind uf(paths.size());
  std::vector<std::pair<size_t, size_t>> pending;
  for (const auto& [lhs, rhs] : relations) {
    if (lhs.empty() && rhs.empty())
      throw InputError("presentation: relation relates two empty paths");
    if (lhs.size() > path_cap || rhs.size() > path_cap)
      throw InputError("presentation: relation path longer than the cap");
    std::pair<std::string, std::string> le, re;
    if (!lhs.empty()) le = walk(lhs);
    if (!rhs.empty()) re = walk(rhs);
    if (lhs.empty()) le = {re.first, re.first};
    if (rhs.empty()) re = {le.first, le.first};
    if (le != re)
      throw InputError("presentation: relation sides are not parallel");
    size_t a = index.at(path_key(le.first, lhs));
    size_t b = index.at(path_key(re.first, rhs));
    if (uf.unite(a, b)) pending.push_back({a, b});
  }

  // Congruence closure: whenever two paths are identified, substituting one
  // for the other inside any enumerated path identifies the results too.
  auto object_at = [&](size_t node, size_t pos) {
    std::string o = srcs[node];
    for (size_t i = 0; i < pos; ++i) o = gen.at(paths[node][i]).second;
    return o;
  };
  auto substitute_everywhere = [&](const ArrowPath& u, const std::string& usrc,
                                   const ArrowPath& v) {
    std::vector<std::pair<size_t, size_t>> merged;
    for (size_t np = 0; np < paths.size(); ++np) {
      const ArrowPath& w = paths[np];
      if (w.size() < u.size()) continue;
      for (size_t i = 0; i + u.size() <= w.size(); ++i) {
        if (!std::equal(u.begin(), u.end(), w.begin() + i)) continue;
        if (object_at(np, i) != usrc) continue;
        ArrowPath w2(w.begin(), w.begin() + i);
        w2.insert(w2.end(), v.begin(), v.end());
        w2.insert(w2.end(), w.begin() + i + u.size(), w.end());
        if (w2.size() > path_cap) continue;
        size_t other = index.at(path_key(srcs[np], w2));
        if (uf.unite(np, other)) merged.push_back({np, other});
      }
    }
    return merged;
  };
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (auto& m : substitute_everywhere(paths[a], srcs[a], paths[b]))
      pending.push_back(m);
    for (auto& m : substitute_everywhere(paths[b], srcs[b], paths[a]))
      pending.push_back(m);
  }

  // Pick each class's shortest member; a class whose members all have the
  // maximal length cannot be certified finite under this cap.
  std::map<size_t, size_t> rep;  // class root -> representative node
  for (size_t i = 0; i < paths.size(); ++i) {
    size_t r = uf.find(i);
    auto it = rep.find(r);
    if (it == rep.end()) {
      rep[r] = i;
      continue;
    }
    size_t j = it->second;
    if (paths[i].size() < paths[j].size() ||
        (paths[i].size() == paths[j].size() &&
         path_name(srcs[i], paths[i]) < path_name(srcs[j], paths[j])))
      it->second = i;
  }
  for (const auto& [root, node] : rep) {
    (void)root;
    if (paths[node].size() >= path_cap)
      throw ResourceError("presentation: path cap " + std::to_string(path_cap) +
                          " reached before the presentation closed; raise path_cap");
  }

  struct Rec {
    std::string src, dst, name;
    size_t node;
  };
  std::vector<Rec> recs;
  std::map<size_t, std::string> class_name;  // class root -> arrow name
  for (const auto& [root, node] : rep) {
    Rec r;
    r.src = srcs[node];
    r.dst = dsts[node];
    r.name = path_name(srcs[node], paths[node]);
    r.node = node;
    recs.push_back(r);
    if (!class_name.emplace(root, r.name).second)
      throw InputError("presentation: internal name clash");
  }
  std::sort(recs.begin(), recs.end(), [&](const Rec& a, const Rec& b) {
    return std::make_tuple(paths[a.node].size(), a.name, a.src) <
           std::make_tuple(paths[b.node].size(), b.name, b.src);
  });
  std::set<std::string> names;
  for (const auto& r : recs)
    if (!names.insert(r.name).second)
      throw InputError("presentation: arrow name clash at '" + r.name + "'");

  FiniteCategory out;
  out.objects = objects;
  for (const auto& r : recs) {
    out.arrows.push_back({r.name, r.src, r.dst});
    if (paths[r.node].empty()) out.id[r.src] = r.name;
  }
  // Compose classes one generator at a time; each step stays under the cap
  // because representatives are strictly shorter than it.
  for (const auto& f : recs)
    for (const auto& g : recs) {
      if (f.dst != g.src) continue;
      size_t cur = f.node;
      for (const auto& step : paths[g.node]) {
        ArrowPath p = paths[rep.at(uf.find(cur))];
        p.push_back(step);
        cur = index.at(path_key(srcs[uf.find(cur)], p));
      }
      out.comp[{g.name, f.name}] = class_name.at(uf.find(cur));
    }
  return out;
}

Quantaloid chain_quantale(int n, ChainLaw law) {
  if (n < 2) throw InputError("chain quantale needs at least two points");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      names[i] = "0";
    else if (i == n - 1)
      names[i] = "1";
    else {
      int g = std::gcd(i, n - 1);
      names[i] = std::to_string(i / g) + "/" + std::to_string((n - 1) / g);
    }
  }
  FiniteLattice lat(names);
  for (int i = 0; i + 1 < n; ++i) lat.add_leq(names[i], names[i + 1]);
  lat.finalize();

  Quantaloid q;
  q.objects = {"*"};
  q.homs[{"*", "*"}] = std::move(lat);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      table[g][f] = law == ChainLaw::frame ? std::min(g, f) : std::max(0, g + f - (n - 1));
  q.comp[{"*", "*", "*"}] = std::move(table);
  q.unit["*"] = "1";
  return q;
}

Quantaloid two_quantale() { return chain_quantale(2, ChainLaw::frame); }

std::string subset_name(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += members[i];
  }
  out += '}';
  return out;
}

std::vector<std::string> subset_members(const std::string& name) {
  if (name.size() < 2 || name.front() != '{' || name.back() != '}')
    throw InputError("'" + name + "' is not a subset element name");
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 1; i + 1 < name.size(); ++i) {
    if (name[i] == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += name[i];
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Quantaloid free_quantaloid(const FiniteCategory& b) {
  {
    auto rep = validate_category(b);
    if (!rep.ok()) throw InputError("free quantaloid: " + rep.violations.front());
  }
  for (const auto& a : b.arrows)
    if (a.name.find_first_of(",{}") != std::string::npos)
      throw InputError("free quantaloid: arrow name '" + a.name + "' cannot be used in subset names");

  Quantaloid q;
  q.objects = b.objects;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> homset;
  for (const auto& x : b.objects)
    for (const auto& y : b.objects) {
      auto names = b.hom(x, y);
      std::sort(names.begin(), names.end());
      if (names.size() > 10)
        throw ResourceError("free quantaloid: hom(" + x + "," + y + ") would have more than 1024 elements");
      homset[{x, y}] = names;
      size_t count = size_t{1} << names.size();
      std::vector<std::string> elts(count);
      for (size_t mask = 0; mask < count; ++mask) {
        std::vector<std::string> members;
        for (size_t i = 0; i < names.size(); ++i)
          if (mask & (size_t{1} << i)) members.push_back(names[i]);
        elts[mask] = subset_name(std::move(members));
      }
      FiniteLattice lat(elts);
      for (size_t s = 0; s < count; ++s)
        for (size_t t = 0; t < count; ++t)
          if ((s & ~t) == 0) lat.add_leq(elts[s], elts[t]);
      lat.finalize();
      q.homs[{x, y}] = std::move(lat);
      if (x == y) q.unit[x] = subset_name({b.id.at(x)});
    }

  for (const auto& x : b.objects)
    for (const auto& y : b.objects)
      for (const auto& z : b.objects) {
        const auto& fs = homset.at({x, y});
        const auto& gs = homset.at({y, z});
        const auto& hs = homset.at({x, z});
        std::map<std::string, size_t> hbit;
        for (size_t i = 0; i < hs.size(); ++i) hbit[hs[i]] = i;
        size_t gn = size_t{1} << gs.size(), fn = size_t{1} << fs.size();
        std::vector<std::vector<int>> table(gn, std::vector<int>(fn, 0));
        // union DP over masks; lattice element order is mask order, so the
        // composite's index is its mask
        for (size_t gm = 1; gm < gn; ++gm)
          for (size_t fm = 1; fm < fn; ++fm) {
            size_t fl = fm & (~fm + 1);
            if (fm != fl) {
              table[gm][fm] = table[gm][fm ^ fl] | table[gm][fl];
              continue;
            }
            size_t gl = gm & (~gm + 1);
            if (gm != gl) {
              table[gm][fm] = table[gm ^ gl][fm] | table[gl][fm];
              continue;
            }
            size_t gi = 0, fi = 0;
            while ((size_t{1} << gi) != gl) ++gi;
            while ((size_t{1} << fi) != fl) ++fi;
            table[gm][fm] = 1 << hbit.at(b.compose(gs[gi], fs[fi]));
          }
        q.comp[{x, y, z}] = std::move(table);
      }
  return q;
}

ValidationReport validate_functor(const FiniteFunctor& f) {
  ValidationReport rep;
  auto bad = [&](const std::string& m) { rep.violations.push_back(m); };
  for (auto& v : validate_category(f.dom).violations) bad("functor domain: " + v);
  for (auto& v : validate_category(f.cod).violations) bad("functor codomain: " + v);
  if (!rep.ok()) return rep;
  for (const auto& x : f.dom.objects) {
    auto it = f.obj_map.find(x);
    if (it == f.obj_map.end())
      bad("functor: no image for object '" + x + "'");
    else if (!f.cod.has_object(it->second))
      bad("functor: image of object '" + x + "' is unknown");
  }
  if (!rep.ok()) return rep;
  for (const auto& a : f.dom.arrows) {
    auto it = f.arr_map.find(a.name);
    if (it == f.arr_map.end()) {
      bad("functor: no image for arrow '" + a.name + "'");
      continue;
    }
    const FiniteArrow* img = nullptr;
    for (const auto& c : f.cod.arrows)
      if (c.name == it->second) img = &c;
    if (!img) {
      bad("functor: image of arrow '" + a.name + "' is unknown");
      continue;
    }
    if (img->src != f.obj_map.at(a.src) || img->dst != f.obj_map.at(a.dst))
      bad("functor: image of arrow '" + a.name + "' has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (const auto& x : f.dom.objects)
    if (f.arr_map.at(f.dom.id.at(x)) != f.cod.id.at(f.obj_map.at(x)))
      bad("functor: identity of '" + x + "' is not preserved");
  for (const auto& a : f.dom.arrows)
    for (const auto& b : f.dom.arrows) {
      if (a.dst != b.src) continue;
      if (f.arr_map.at(f.dom.compose(b.name, a.name)) !=
          f.cod.compose(f.arr_map.at(b.name), f.arr_map.at(a.name)))
        bad("functor: composition not preserved at (" + a.name + "," + b.name + ")");
    }
  return rep;
}

bool is_faithful(const FiniteFunctor& f) {
  for (const auto& x : f.dom.objects)
    for (const auto& y : f.dom.objects) {
      auto names = f.dom.hom(x, y);
      std::set<std::string> images;
      for (const auto& n : names) images.insert(f.arr_map.at(n));
      if (images.size() != names.size()) return false;
    }
  return true;
}

VCategory faithful_to_vcat(const FiniteFunctor& f) {
  return faithful_to_vcat(f, std::make_shared<Quantaloid>(free_quantaloid(f.cod)));
}

VCategory faithful_to_vcat(const FiniteFunctor& f, std::shared_ptr<const Quantaloid> base) {
  {
    auto rep = validate_functor(f);
    if (!rep.ok()) throw InputError(rep.violations.front());
  }
  if (!is_faithful(f)) throw InputError("conversion requires a faithful functor");
  if (!base || !(*base == free_quantaloid(f.cod)))
    throw InputError("conversion: base is not the free quantaloid on the functor's codomain");
  VCategory a;
  a.base = std::move(base);
  a.objects = f.dom.objects;
  for (const auto& x : f.dom.objects) a.extent[x] = f.obj_map.at(x);
  for (const auto& x : f.dom.objects)
    for (const auto& y : f.dom.objects) {
      std::vector<std::string> images;
      for (const auto& n : f.dom.hom(y, x)) images.push_back(f.arr_map.at(n));
      a.hom[{x, y}] = subset_name(std::move(images));
    }
  return a;
}

FiniteFunctor vcat_to_faithful(const VCategory& a, const FiniteCategory& b) {
  if (!a.base || !(*a.base == free_quantaloid(b)))
    throw InputError("conversion: category is not enriched in the free quantaloid on the given base");
  {
    auto rep = validate_vcategory(a);
    if (!rep.ok()) throw InputError(rep.violations.front());
  }
  struct Triple {
    std::string src, dst, img;
  };
  std::vector<Triple> triples;
  std::map<std::string, int> img_count;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& g : subset_members(a.hom.at({x, y}))) {
        triples.push_back({y, x, g});
        ++img_count[g];
      }
  auto lifted_name = [&](const Triple& t) {
    return img_count.at(t.img) == 1 ? t.img : t.img + "@" + t.src + ">" + t.dst;
  };

  FiniteFunctor f;
  f.dom.objects = a.objects;
  f.cod = b;
  std::map<std::tuple<std::string, std::string, std::string>, std::string> by_data;
  auto add_arrow = [&](const Triple& t) {
    std::string n = lifted_name(t);
    f.dom.arrows.push_back({n, t.src, t.dst});
    f.arr_map[n] = t.img;
    by_data[{t.src, t.dst, t.img}] = n;
  };
  for (const auto& x : a.objects) {
    Triple t{x, x, b.id.at(a.ext(x))};
    add_arrow(t);
    f.dom.id[x] = lifted_name(t);
    f.obj_map[x] = a.ext(x);
  }
  std::vector<Triple> rest;
  for (const auto& t : triples)
    if (!(t.src == t.dst && t.img == b.id.at(a.ext(t.src)))) rest.push_back(t);
  std::sort(rest.begin(), rest.end(), [](const Triple& l, const Triple& r) {
    return std::tie(l.src, l.dst, l.img) < std::tie(r.src, r.dst, r.img);
  });
  for (const auto& t : rest) add_arrow(t);

  for (const auto& s : f.dom.arrows)
    for (const auto& t : f.dom.arrows) {
      if (s.dst != t.src) continue;
      std::string img = b.compose(f.arr_map.at(t.name), f.arr_map.at(s.name));
      f.dom.comp[{t.name, s.name}] = by_data.at({s.src, t.dst, img});
    }
  return f;
}

}  // namespace qcat
