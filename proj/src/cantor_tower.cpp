#include "afrokhlin/cantor_tower.hpp"

#include <algorithm>
#include <set>

namespace afrokhlin {

using nlohmann::json;

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table)
    : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0)
    throw InputError("group must have at least one element");
  for (const auto &row : table_) {
    if (row.size() != n)
      throw InputError("group table must be square");
    for (auto v : row)
      if (v >= n)
        throw InputError("group table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found)
    throw InputError("group table has no identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n && !has_inverse; ++h)
      has_inverse = table_[g][h] == identity_ && table_[h][g] == identity_;
    if (!has_inverse)
      throw InputError("group element " + std::to_string(g) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("group table is not associative");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t g = 0; g < na * nb; ++g)
    for (std::size_t h = 0; h < na * nb; ++h)
      t[g][h] = a.mul(g / nb, h / nb) * nb + b.mul(g % nb, h % nb);
  return FiniteGroup(std::move(t));
}

FiniteGSet::FiniteGSet(std::vector<std::string> elements, FiniteGroup group,
                       std::vector<std::vector<std::size_t>> action)
    : elements_(std::move(elements)), group_(std::move(group)), action_(std::move(action)) {
  const std::size_t n = elements_.size();
  if (n == 0)
    throw InputError("G-set must have at least one element");
  std::set<std::string> seen(elements_.begin(), elements_.end());
  if (seen.size() != n)
    throw InputError("G-set element names must be distinct");
  if (action_.size() != group_.order())
    throw InputError("action needs one row per group element");
  for (const auto &row : action_) {
    if (row.size() != n)
      throw InputError("action row must have one entry per element");
    for (auto v : row)
      if (v >= n)
        throw InputError("action entry out of range");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (action_[group_.identity()][x] != x)
      throw InputError("identity does not act trivially on '" + elements_[x] + "'");
  for (std::size_t g = 0; g < group_.order(); ++g)
    for (std::size_t h = 0; h < group_.order(); ++h)
      for (std::size_t x = 0; x < n; ++x)
        if (action_[group_.mul(g, h)][x] != action_[g][action_[h][x]])
          throw InputError("action is not compatible with the group law");
}

std::size_t FiniteGSet::index_of(const std::string &name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end())
    throw InputError("unknown element '" + name + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

FreenessResult is_free(const FiniteGSet &gs) {
  for (std::size_t g = 0; g < gs.group().order(); ++g) {
    if (g == gs.group().identity())
      continue;
    for (std::size_t x = 0; x < gs.size(); ++x)
      if (gs.act(g, x) == x)
        return {false, std::make_pair(g, x)};
  }
  return {};
}

std::vector<ElementSet> translates_of(const FiniteGSet &gs, const ElementSet &set) {
  std::vector<ElementSet> out(gs.group().order());
  for (std::size_t g = 0; g < gs.group().order(); ++g) {
    for (auto x : set)
      out[g].push_back(gs.act(g, x));
    std::sort(out[g].begin(), out[g].end());
  }
  return out;
}

namespace {

bool translates_disjoint(const FiniteGSet &gs, const ElementSet &set) {
  std::vector<char> seen(gs.size(), 0);
  for (const auto &t : translates_of(gs, set))
    for (auto x : t) {
      if (seen[x])
        return false;
      seen[x] = 1;
    }
  return true;
}

void require_free(const FiniteGSet &gs) {
  auto f = is_free(gs);
  if (!f.free)
    throw DomainError("action is not free: element " + std::to_string(f.fixed->first) +
                      " fixes '" + gs.elements()[f.fixed->second] + "'");
}

} // namespace

Tower greedy_tower(const FiniteGSet &gs, const std::vector<ElementSet> &cover) {
  require_free(gs);
  if (cover.empty())
    throw InputError("cover union insufficient: the cover is empty");
  std::vector<char> reached(gs.size(), 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (auto x : cover[i])
      if (x >= gs.size())
        throw InputError("cover set " + std::to_string(i) + " has an out-of-range element");
    if (!translates_disjoint(gs, cover[i]))
      throw InputError("cover set " + std::to_string(i) + " has colliding translates");
    for (const auto &t : translates_of(gs, cover[i]))
      for (auto x : t)
        reached[x] = 1;
  }
  for (std::size_t x = 0; x < gs.size(); ++x)
    if (!reached[x])
      throw InputError("cover union insufficient: '" + gs.elements()[x] +
                       "' is not in any G-translate of the cover");

  // orbit_of_base[x] marks membership in G.N_k.
  std::vector<char> in_orbit(gs.size(), 0);
  ElementSet base;
  for (const auto &k : cover) {
    std::vector<std::size_t> added;
    for (auto x : k)
      if (!in_orbit[x] && std::find(base.begin(), base.end(), x) == base.end())
        added.push_back(x);
    for (auto x : added) {
      base.push_back(x);
      for (std::size_t g = 0; g < gs.group().order(); ++g)
        in_orbit[gs.act(g, x)] = 1;
    }
  }
  std::sort(base.begin(), base.end());
  return {base, translates_of(gs, base)};
}

std::vector<ElementSet> default_cover(const FiniteGSet &gs) {
  require_free(gs);
  std::vector<ElementSet> cover;
  for (std::size_t x = 0; x < gs.size(); ++x)
    cover.push_back({x});
  return cover;
}

bool verify_tower(const FiniteGSet &gs, const Tower &tower) {
  if (tower.translates.size() != gs.group().order())
    return false;
  if (tower.translates != translates_of(gs, tower.base))
    return false;
  std::vector<int> count(gs.size(), 0);
  for (const auto &t : tower.translates)
    for (auto x : t) {
      if (x >= gs.size())
        return false;
      ++count[x];
    }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

FiniteGSet gset_from_json(const json &doc) {
  try {
    auto elements = doc.at("elements").get<std::vector<std::string>>();
    const json &g = doc.at("group");
    auto table = g.at("table").get<std::vector<std::vector<std::size_t>>>();
    if (g.contains("order") && g.at("order").get<std::size_t>() != table.size())
      throw InputError("group order does not match the table size");
    auto action = doc.at("action").get<std::vector<std::vector<std::size_t>>>();
    return FiniteGSet(std::move(elements), FiniteGroup(std::move(table)), std::move(action));
  } catch (const json::exception &e) {
    throw InputError(std::string("malformed G-set document: ") + e.what());
  }
}

std::vector<ElementSet> cover_from_json(const FiniteGSet &gs, const json &doc) {
  if (!doc.is_array())
    throw InputError("cover must be an array of element-name arrays");
  std::vector<ElementSet> cover;
  for (const auto &set : doc) {
    if (!set.is_array())
      throw InputError("cover entries must be arrays of element names");
    ElementSet s;
    for (const auto &name : set) {
      if (!name.is_string())
        throw InputError("cover entries must be element names");
      s.push_back(gs.index_of(name.get<std::string>()));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    cover.push_back(std::move(s));
  }
  return cover;
}

json to_json(const FiniteGSet &gs, const Tower &tower) {
  auto names = [&](const ElementSet &s) {
    json arr = json::array();
    for (auto x : s)
      arr.push_back(gs.elements()[x]);
    return arr;
  };
  json translates = json::array();
  for (std::size_t g = 0; g < tower.translates.size(); ++g)
    translates.push_back({{"group_element", g}, {"set", names(tower.translates[g])}});
  return {{"base", names(tower.base)}, {"translates", translates}};
}

} // namespace afrokhlin
