#pragma once

#include <cstdint>
#include <vector>

namespace khtot {

// Attachment side of an arc endpoint relative to the listed direction of its
// circle. For a circle drawn counterclockwise in the plane, L is the inside.
enum class Side : std::uint8_t { L = 0, R = 1 };

constexpr Side flip(Side s) noexcept { return s == Side::L ? Side::R : Side::L; }
constexpr char side_char(Side s) noexcept { return s == Side::L ? 'L' : 'R'; }

// Arc endpoints are numbered 2*arc + end, end in {0, 1}.
constexpr int endpoint_id(int arc, int end) noexcept { return 2 * arc + end; }
constexpr int arc_of(int endpoint) noexcept { return endpoint / 2; }
constexpr int opposite(int endpoint) noexcept { return endpoint ^ 1; }

struct SlotSpec {
  int arc;
  int end;
  Side side;
};

// Circles in S^2 with embedded arcs, stored combinatorially: each circle is a
// cyclic word of arc endpoints, each endpoint carries its attachment side.
// Relative placement of disconnected components is not recorded.
class ResolutionConfiguration {
 public:
  struct Position {
    int circle;
    int index;
  };

  ResolutionConfiguration() = default;
  // Throws BadIndex when the endpoints are not exactly 0..2k-1, once each.
  ResolutionConfiguration(std::vector<std::vector<int>> circles, std::vector<Side> sides);

  static ResolutionConfiguration from_slots(const std::vector<std::vector<SlotSpec>>& circles);

  int circle_count() const noexcept { return static_cast<int>(circles_.size()); }
  int arc_count() const noexcept { return static_cast<int>(sides_.size() / 2); }
  int dimension() const noexcept { return arc_count(); }

  const std::vector<std::vector<int>>& circles() const noexcept { return circles_; }
  const std::vector<int>& circle(int c) const { return circles_.at(c); }
  const std::vector<Side>& sides() const noexcept { return sides_; }
  Side side(int endpoint) const { return sides_.at(endpoint); }
  Position position(int endpoint) const { return positions_.at(endpoint); }

  // Segments run from slot j to slot j+1 of a circle; a circle with no slots
  // is a single segment.
  int segment_count() const noexcept { return segment_total_; }
  int segment_id(int circle, int index) const { return segment_base_.at(circle) + index; }
  int segments_on(int circle) const;
  int circle_of_segment(int segment) const;

  bool is_passive(int circle) const { return circles_.at(circle).empty(); }

  friend bool operator==(const ResolutionConfiguration& a, const ResolutionConfiguration& b) {
    return a.circles_ == b.circles_ && a.sides_ == b.sides_;
  }

 private:
  void index();

  std::vector<std::vector<int>> circles_;
  std::vector<Side> sides_;
  std::vector<Position> positions_;
  std::vector<int> segment_base_;
  int segment_total_ = 0;
};

}  // namespace khtot
