#include "khtot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "khtot/cube.hpp"
#include "khtot/error.hpp"

namespace khtot {

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  PlanarDiagram run() {
    PlanarDiagram d;
    skip_space();
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == 'U') {
        ++pos_;
        ++d.free_loops;
      } else if (ch == 'X') {
        ++pos_;
        d.crossings.push_back(crossing());
      } else {
        fail("unexpected character '" + std::string(1, ch) + "'");
      }
      if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        fail("terms must be separated by whitespace");
      }
      skip_space();
    }
    return d;
  }

 private:
  std::array<int, 4> crossing() {
    expect('(');
    std::array<int, 4> labels{};
    for (int i = 0; i < 4; ++i) {
      skip_space();
      labels[i] = number();
      skip_space();
      if (i < 3) {
        if (peek() == ')') fail("crossing has fewer than four labels");
        expect(',');
      }
    }
    if (peek() == ',') fail("crossing has more than four labels");
    expect(')');
    return labels;
  }

  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer label");
    if (value == 0) fail("labels must be positive");
    return static_cast<int>(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::MalformedSyntax, msg + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

int PlanarDiagram::positive_crossings() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), 1));
}

int PlanarDiagram::negative_crossings() const {
  return static_cast<int>(std::count(signs.begin(), signs.end(), -1));
}

void validate(const PlanarDiagram& d) {
  if (d.free_loops < 0) throw Error(ErrorKind::BadIncidence, "negative free loop count");
  if (d.crossings.empty() && d.free_loops == 0) {
    throw Error(ErrorKind::EmptyDiagram, "no crossings and no free loops");
  }
  std::map<int, int> seen;
  for (const auto& x : d.crossings) {
    for (int label : x) {
      if (label <= 0) throw Error(ErrorKind::BadIncidence, "non-positive label");
      ++seen[label];
    }
  }
  for (const auto& [label, count] : seen) {
    if (count != 2) {
      throw Error(ErrorKind::BadIncidence,
                  "edge " + std::to_string(label) + " occurs " + std::to_string(count) + " times");
    }
  }
  if (!d.signs.empty() && d.signs.size() != d.crossings.size()) {
    throw Error(ErrorKind::BadIncidence, "sign annotation length differs from crossing count");
  }
}

PlanarDiagram normalize_labels(const PlanarDiagram& d) {
  std::map<int, int> relabel;
  PlanarDiagram out = d;
  for (auto& x : out.crossings) {
    for (int& label : x) {
      auto [it, inserted] = relabel.try_emplace(label, static_cast<int>(relabel.size()) + 1);
      label = it->second;
    }
  }
  return out;
}

PlanarDiagram parse_pd(std::string_view text) {
  PlanarDiagram d = PdScanner(text).run();
  validate(d);
  return normalize_labels(d);
}

std::string to_pd_text(const PlanarDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings) {
    if (!first) os << ' ';
    first = false;
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  for (int i = 0; i < d.free_loops; ++i) {
    if (!first) os << ' ';
    first = false;
    os << 'U';
  }
  return os.str();
}

PlanarDiagram mirror_diagram(const PlanarDiagram& d) {
  PlanarDiagram out = d;
  for (auto& x : out.crossings) std::swap(x[1], x[3]);
  for (int& s : out.signs) s = -s;
  if (!d.name.empty()) out.name = "mirror(" + d.name + ")";
  return out;
}

namespace {

// Slot s = 4 * crossing + position; returns the other slot carrying the same label.
std::vector<int> label_partners(const PlanarDiagram& d) {
  const int slots = 4 * d.crossing_count();
  std::map<int, int> first;
  std::vector<int> partner(slots, -1);
  for (int s = 0; s < slots; ++s) {
    const int label = d.crossings[s / 4][s % 4];
    auto [it, inserted] = first.try_emplace(label, s);
    if (!inserted) {
      partner[s] = it->second;
      partner[it->second] = s;
    }
  }
  return partner;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool is_planar(const PlanarDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return true;
  const auto partner = label_partners(d);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int s = 0; s < 4 * n; ++s) {
    parent[find_root(parent, s / 4)] = find_root(parent, partner[s] / 4);
  }
  std::vector<int> vertices(n, 0), faces(n, 0);
  for (int c = 0; c < n; ++c) ++vertices[find_root(parent, c)];
  std::vector<char> seen(4 * n, 0);
  for (int s = 0; s < 4 * n; ++s) {
    if (seen[s]) continue;
    ++faces[find_root(parent, s / 4)];
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      const int across = partner[cur];
      cur = 4 * (across / 4) + (across % 4 + 1) % 4;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (find_root(parent, c) != c) continue;
    // V - E + F with E = 2V.
    if (faces[c] - vertices[c] != 2) return false;
  }
  return true;
}

PlanarDiagram with_inferred_orientation(const PlanarDiagram& d) {
  validate(d);
  const int n = d.crossing_count();
  const auto partner = label_partners(d);
  auto label = [&](int s) { return d.crossings[s / 4][s % 4]; };
  auto straight = [](int s) { return 4 * (s / 4) + (s % 4 + 2) % 4; };
  // incoming[s]: the edge at slot s points into the crossing.
  std::vector<int> incoming(4 * n, -1);
  std::vector<int> order(4 * n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(label(a), a) < std::pair(label(b), b);
  });
  for (int s : order) {
    if (incoming[s] != -1) continue;
    const int other = partner[s];
    // Prefer heading into the end whose straight continuation carries label+1.
    int head = std::max(s, other);
    int tail = std::min(s, other);
    if (label(straight(head)) != label(s) + 1 && label(straight(tail)) == label(s) + 1) {
      std::swap(head, tail);
    }
    int cur_head = head;
    int cur_tail = tail;
    while (incoming[cur_head] == -1) {
      incoming[cur_head] = 1;
      incoming[cur_tail] = 0;
      const int next_tail = straight(cur_head);
      cur_tail = next_tail;
      cur_head = partner[next_tail];
    }
  }
  PlanarDiagram out = d;
  out.signs.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    const bool oriented_zero = incoming[4 * c] != incoming[4 * c + 1];
    out.signs[c] = oriented_zero ? 1 : -1;
  }
  return out;
}

PlanarDiagram configuration_to_diagram(const ResolutionConfiguration& c) {
  if (!is_planar(c)) throw Error(ErrorKind::NonPlanar, "configuration is not planar");
  PlanarDiagram d;
  d.crossings.assign(c.arc_count(), {0, 0, 0, 0});
  auto entry_pos = [&](int e) {
    const bool left = c.side(e) == Side::L;
    return (e % 2 == 0) ? (left ? 0 : 1) : (left ? 2 : 3);
  };
  auto exit_pos = [&](int e) {
    const bool left = c.side(e) == Side::L;
    return (e % 2 == 0) ? (left ? 1 : 0) : (left ? 3 : 2);
  };
  int next_label = 1;
  for (const auto& word : c.circles()) {
    if (word.empty()) {
      ++d.free_loops;
      continue;
    }
    const int m = static_cast<int>(word.size());
    for (int i = 0; i < m; ++i) {
      const int from = word[i];
      const int to = word[(i + 1) % m];
      d.crossings[arc_of(from)][exit_pos(from)] = next_label;
      d.crossings[arc_of(to)][entry_pos(to)] = next_label;
      ++next_label;
    }
  }
  return d;
}

}  // namespace khtot
