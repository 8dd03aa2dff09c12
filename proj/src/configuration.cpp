#include "khtot/configuration.hpp"

#include <algorithm>
#include <string>

#include "khtot/error.hpp"

namespace khtot {

ResolutionConfiguration::ResolutionConfiguration(std::vector<std::vector<int>> circles,
                                                 std::vector<Side> sides)
    : circles_(std::move(circles)), sides_(std::move(sides)) {
  if (sides_.size() % 2 != 0) {
    throw Error(ErrorKind::BadIndex, "odd number of arc endpoints");
  }
  index();
}

ResolutionConfiguration ResolutionConfiguration::from_slots(
    const std::vector<std::vector<SlotSpec>>& circles) {
  int max_arc = -1;
  for (const auto& c : circles) {
    for (const auto& s : c) max_arc = std::max(max_arc, s.arc);
  }
  std::vector<std::vector<int>> words;
  std::vector<Side> sides(2 * (max_arc + 1), Side::L);
  for (const auto& c : circles) {
    std::vector<int> word;
    for (const auto& s : c) {
      if (s.arc < 0 || s.end < 0 || s.end > 1) {
        throw Error(ErrorKind::BadIndex, "bad slot specification");
      }
      word.push_back(endpoint_id(s.arc, s.end));
      sides[endpoint_id(s.arc, s.end)] = s.side;
    }
    words.push_back(std::move(word));
  }
  return ResolutionConfiguration(std::move(words), std::move(sides));
}

void ResolutionConfiguration::index() {
  const int endpoints = static_cast<int>(sides_.size());
  positions_.assign(endpoints, Position{-1, -1});
  segment_base_.clear();
  segment_total_ = 0;
  for (int c = 0; c < circle_count(); ++c) {
    const auto& word = circles_[c];
    segment_base_.push_back(segment_total_);
    segment_total_ += word.empty() ? 1 : static_cast<int>(word.size());
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
      const int e = word[i];
      if (e < 0 || e >= endpoints) {
        throw Error(ErrorKind::BadIndex, "endpoint " + std::to_string(e) + " out of range");
      }
      if (positions_[e].circle != -1) {
        throw Error(ErrorKind::BadIndex, "endpoint " + std::to_string(e) + " listed twice");
      }
      positions_[e] = Position{c, i};
    }
  }
  for (int e = 0; e < endpoints; ++e) {
    if (positions_[e].circle == -1) {
      throw Error(ErrorKind::BadIndex, "endpoint " + std::to_string(e) + " lies on no circle");
    }
  }
}

int ResolutionConfiguration::segments_on(int circle) const {
  const auto& word = circles_.at(circle);
  return word.empty() ? 1 : static_cast<int>(word.size());
}

int ResolutionConfiguration::circle_of_segment(int segment) const {
  auto it = std::upper_bound(segment_base_.begin(), segment_base_.end(), segment);
  return static_cast<int>(it - segment_base_.begin()) - 1;
}

}  // namespace khtot
