#include "oddakh/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "oddakh/errors.hpp"

namespace oddakh {

namespace {

std::string edge_str(EdgeId e) { return std::to_string(e); }

// Direction of the strand at a slot: true if the edge enters the crossing there.
// Slot 0 is the incoming under-strand and slot 2 the outgoing one; the over-strand
// slots depend on the crossing's orientation bit.
bool enters_at(int position, bool over_forward) {
  switch (position) {
    case 0: return true;
    case 2: return false;
    case 3: return over_forward;
    default: return !over_forward;
  }
}

}  // namespace

AnnularDiagram::AnnularDiagram(std::string name, std::vector<Crossing> crossings, std::vector<EdgeId> loops,
                               std::vector<GammaCrossing> gamma)
    : name_(std::move(name)), crossings_(std::move(crossings)), loops_(std::move(loops)), gamma_(std::move(gamma)) {
  validate();
}

void AnnularDiagram::validate() {
  std::map<EdgeId, std::vector<Slot>> slots;
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
    for (int p = 0; p < 4; ++p) slots[crossings_[c].edges[p]].push_back({c, p});

  std::map<EdgeId, int> loop_count;
  for (EdgeId e : loops_) ++loop_count[e];
  for (const auto& [e, n] : loop_count) {
    if (n != 1) throw InputError("edge " + edge_str(e) + " declared as a loop more than once");
    if (slots.count(e)) throw InputError("edge " + edge_str(e) + " is a loop but also appears at a crossing");
  }
  for (const auto& [e, s] : slots)
    if (s.size() != 2)
      throw InputError("edge " + edge_str(e) + " used " + std::to_string(s.size()) + " times (expected 2)");

  for (const auto& [e, s] : slots) edges_.push_back(e);
  for (const auto& [e, n] : loop_count) edges_.push_back(e);
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_pos_.emplace(edges_[i], i);
  loop_.assign(edges_.size(), false);
  for (EdgeId e : loops_) loop_[edge_pos_.at(e)] = true;

  for (const auto& g : gamma_) {
    if (!edge_pos_.count(g.edge)) throw InputError("gamma references unknown edge " + edge_str(g.edge));
    if (g.sign != 1 && g.sign != -1) throw InputError("gamma sign must be +1 or -1");
  }

  // Orientation: one unknown bit per crossing (direction of its over-strand). Every
  // edge must enter at one end and leave at the other, which gives parity relations
  // between bits; slots 0 and 2 pin values. Node n = crossing count stands for the
  // constant 'true'.
  const int n = static_cast<int>(crossings_.size());
  struct Rel {
    int other;
    bool parity;  // value(self) xor value(other)
  };
  std::vector<std::vector<Rel>> graph(n + 1);
  auto node_of = [&](const Slot& s) { return (s.position % 2 == 0) ? n : s.crossing; };
  // enters = value(node) xor bias
  auto bias_of = [](const Slot& s) { return s.position == 2 || s.position == 1; };
  for (const auto& [e, s] : slots) {
    const int a = node_of(s[0]), b = node_of(s[1]);
    const bool rel = !(bias_of(s[0]) != bias_of(s[1]));  // value(a) xor value(b) must equal this
    if (a == b) {
      if (rel) throw InputError("orientation inconsistency on edge " + edge_str(e));
      continue;
    }
    graph[a].push_back({b, rel});
    graph[b].push_back({a, rel});
  }
  std::vector<int> value(n + 1, -1);
  auto propagate = [&](int root, bool v) {
    value[root] = v;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& r : graph[u]) {
        const int want = value[u] ^ static_cast<int>(r.parity);
        if (value[r.other] == -1) {
          value[r.other] = want;
          q.push(r.other);
        } else if (value[r.other] != want) {
          throw InputError("orientation inconsistency at crossing " + std::to_string(std::min(u, r.other)));
        }
      }
    }
  };
  propagate(n, true);
  // Components passing only over other strands carry no orientation data; orient
  // them so that their crossing with the smallest edge tuple has its over-strand
  // running 3 -> 1. Independent of the order crossings are listed in.
  std::vector<int> by_tuple(n);
  std::iota(by_tuple.begin(), by_tuple.end(), 0);
  std::stable_sort(by_tuple.begin(), by_tuple.end(),
                   [&](int a, int b) { return crossings_[a].edges < crossings_[b].edges; });
  for (int c : by_tuple)
    if (value[c] == -1) propagate(c, true);
  over_forward_.resize(n);
  for (int c = 0; c < n; ++c) over_forward_[c] = value[c] == 1;

  head_.assign(edges_.size(), Slot{});
  tail_.assign(edges_.size(), Slot{});
  for (const auto& [e, s] : slots) {
    const std::size_t i = edge_pos_.at(e);
    for (const auto& slot : s) {
      if (enters_at(slot.position, over_forward_[slot.crossing]))
        head_[i] = slot;
      else
        tail_[i] = slot;
    }
    if (head_[i].crossing < 0 || tail_[i].crossing < 0)
      throw InputError("orientation inconsistency on edge " + edge_str(e));
  }

  // Components: follow each edge to its head and continue straight through the crossing.
  std::vector<bool> seen(edges_.size(), false);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<EdgeId> comp;
    if (loop_[i]) {
      seen[i] = true;
      comp.push_back(edges_[i]);
    } else {
      std::size_t cur = i;
      while (!seen[cur]) {
        seen[cur] = true;
        comp.push_back(edges_[cur]);
        const Slot h = head_[cur];
        const EdgeId next = crossings_[h.crossing].edges[(h.position + 2) % 4];
        cur = edge_pos_.at(next);
      }
      if (cur != i) throw InputError("edge " + edge_str(edges_[i]) + " does not close up into a component");
    }
    components_.push_back(std::move(comp));
  }
}

std::size_t AnnularDiagram::edge_index(EdgeId e) const {
  auto it = edge_pos_.find(e);
  if (it == edge_pos_.end()) throw InputError("unknown edge " + edge_str(e));
  return it->second;
}

bool AnnularDiagram::is_loop(EdgeId e) const { return loop_[edge_index(e)]; }
Slot AnnularDiagram::head(EdgeId e) const { return head_[edge_index(e)]; }
Slot AnnularDiagram::tail(EdgeId e) const { return tail_[edge_index(e)]; }

AnnularDiagram parse_diagram(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed diagram: ") + e.what());
  }
  if (!j.is_object()) throw InputError("malformed diagram: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "crossings" && key != "arrows" && key != "loops" && key != "gamma")
      throw InputError("malformed diagram: unknown field '" + key + "'");

  auto require_int = [](const json& v, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string("malformed diagram: ") + what + " must be an integer");
    return v.get<int>();
  };
  auto array_field = [&](const char* key) -> json {
    if (!j.contains(key)) return json::array();
    if (!j[key].is_array()) throw InputError(std::string("malformed diagram: '") + key + "' must be an array");
    return j[key];
  };

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("malformed diagram: 'name' must be a string");
    name = j["name"].get<std::string>();
  }

  std::vector<Crossing> crossings;
  for (const auto& x : array_field("crossings")) {
    if (!x.is_array() || x.size() != 4) throw InputError("malformed diagram: each crossing must be a 4-tuple");
    Crossing c;
    for (int p = 0; p < 4; ++p) c.edges[p] = require_int(x[p], "edge id");
    crossings.push_back(c);
  }

  const json arrows = array_field("arrows");
  if (arrows.size() != crossings.size())
    throw InputError("malformed diagram: need one arrow per crossing (" + std::to_string(crossings.size()) +
                     "), got " + std::to_string(arrows.size()));
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!arrows[i].is_string()) throw InputError("malformed diagram: arrows must be \"U\" or \"D\"");
    const auto s = arrows[i].get<std::string>();
    if (s == "U")
      crossings[i].arrow = Arrow::up;
    else if (s == "D")
      crossings[i].arrow = Arrow::down;
    else
      throw InputError("malformed diagram: arrows must be \"U\" or \"D\"");
  }

  std::vector<EdgeId> loops;
  for (const auto& v : array_field("loops")) loops.push_back(require_int(v, "loop edge id"));

  std::vector<GammaCrossing> gamma;
  for (const auto& g : array_field("gamma")) {
    if (!g.is_array() || g.size() != 2) throw InputError("malformed diagram: gamma entries are [edge, sign]");
    gamma.push_back({require_int(g[0], "gamma edge"), require_int(g[1], "gamma sign")});
  }
  return AnnularDiagram(std::move(name), std::move(crossings), std::move(loops), std::move(gamma));
}

std::string serialize(const AnnularDiagram& d) {
  std::ostringstream out;
  out << "{\n  \"name\": " << nlohmann::json(d.name()).dump() << ",\n  \"crossings\": [";
  const auto& xs = d.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? ",\n    " : "\n    ") << '[' << xs[i].edges[0] << ", " << xs[i].edges[1] << ", " << xs[i].edges[2]
        << ", " << xs[i].edges[3] << ']';
  }
  out << (xs.empty() ? "]" : "\n  ]") << ",\n  \"arrows\": [";
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << (xs[i].arrow == Arrow::up ? "\"U\"" : "\"D\"");
  out << "],\n  \"loops\": [";
  for (std::size_t i = 0; i < d.loops().size(); ++i) out << (i ? ", " : "") << d.loops()[i];
  out << "],\n  \"gamma\": [";
  for (std::size_t i = 0; i < d.gamma().size(); ++i)
    out << (i ? ", " : "") << '[' << d.gamma()[i].edge << ", " << d.gamma()[i].sign << ']';
  out << "]\n}\n";
  return out.str();
}

AnnularDiagram load_diagram(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  if (!std::filesystem::exists(p)) {
    std::filesystem::path alt = p;
    alt += ".json";
    if (!std::filesystem::exists(alt)) throw InputError("cannot open diagram file " + path.string());
    p = alt;
  }
  std::ifstream in(p);
  if (!in) throw InputError("cannot open diagram file " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

DiagramStats crossing_signs(const AnnularDiagram& d) {
  DiagramStats s;
  for (int c = 0; c < static_cast<int>(d.num_crossings()); ++c) (d.crossing_sign(c) > 0 ? s.n_plus : s.n_minus)++;
  s.num_components = static_cast<int>(d.components().size());
  return s;
}

int winding_parity(const AnnularDiagram& d) {
  int total = 0;
  for (const auto& g : d.gamma()) total += g.sign;
  return ((total % 2) + 2) % 2;
}

AnnularDiagram permute_crossings(const AnnularDiagram& d, const std::vector<int>& order) {
  if (order.size() != d.num_crossings()) throw InputError("crossing permutation has the wrong length");
  std::vector<bool> used(order.size(), false);
  std::vector<Crossing> xs;
  for (int o : order) {
    if (o < 0 || o >= static_cast<int>(order.size()) || used[o]) throw InputError("not a permutation");
    used[o] = true;
    xs.push_back(d.crossings()[o]);
  }
  return AnnularDiagram(d.name(), std::move(xs), d.loops(), d.gamma());
}

}  // namespace oddakh
