#include <algorithm>
#include <string>

#include "resproc/oracle.hpp"

namespace resproc::oracle {

std::vector<sets::Value> oracle_ordered_sets(std::span<const sets::Value> weights, const sets::Aggregation& agg,
                                             std::span<const sets::SetOp> ops) {
  const int n = static_cast<int>(weights.size());
  if (n > 64) throw CapacityError("oracle_ordered_sets supports n <= 64");
  sets::validate_ops(n, ops);
  std::vector<std::vector<int>> rows(n + 1);
  std::vector<int> row_of(n + 1);
  for (int x = 1; x <= n; ++x) {
    rows[x] = {x};
    row_of[x] = x;
  }
  std::vector<sets::Value> answers;
  for (const sets::SetOp& op : ops) {
    if (const auto* u = std::get_if<sets::UnionOp>(&op)) {
      const int rx = row_of[u->x];
      const int ry = row_of[u->y];
      if (rx == ry) continue;
      std::vector<int> merged = u->side == sets::Side::kLeft ? rows[rx] : rows[ry];
      const std::vector<int>& tail = u->side == sets::Side::kLeft ? rows[ry] : rows[rx];
      merged.insert(merged.end(), tail.begin(), tail.end());
      rows[ry].clear();
      rows[rx] = std::move(merged);
      for (int e : rows[rx]) row_of[e] = rx;
    } else {
      const int x = std::get<sets::QueryOp>(op).x;
      sets::Value acc = agg.neutral;
      for (int e : rows[row_of[x]]) {
        if (e == x) break;
        acc = agg(acc, weights[e - 1]);
      }
      answers.push_back(acc);
    }
  }
  return answers;
}

NaiveIntervals::NaiveIntervals(int n, sets::Color initial) : n_(n) {
  if (n >= 1) pieces_[1] = Piece{n, initial};
}

bool NaiveIntervals::split(int i, int k, sets::Color left, sets::Color right) {
  auto it = pieces_.find(i);
  if (it == pieces_.end() || k < i || k >= it->second.end) return false;
  const int end = it->second.end;
  history_[k] = Record{i, end, it->second.color};
  it->second = Piece{k, left};
  pieces_[k + 1] = Piece{end, right};
  return true;
}

bool NaiveIntervals::undo(int k, std::optional<sets::Color> recolor) {
  auto rec = history_.find(k);
  if (rec == history_.end()) return false;
  auto left = pieces_.find(rec->second.start);
  auto right = pieces_.find(k + 1);
  if (left == pieces_.end() || right == pieces_.end() || left->second.end != k ||
      right->second.end != rec->second.end) {
    return false;
  }
  left->second = Piece{rec->second.end, recolor.value_or(rec->second.color)};
  pieces_.erase(right);
  history_.erase(rec);
  return true;
}

std::optional<sets::Color> NaiveIntervals::query(int i) const {
  auto it = pieces_.find(i);
  if (it == pieces_.end()) return std::nullopt;
  return it->second.color;
}

std::vector<std::tuple<int, int, sets::Color>> NaiveIntervals::intervals() const {
  std::vector<std::tuple<int, int, sets::Color>> out;
  for (const auto& [start, piece] : pieces_) out.emplace_back(start, piece.end, piece.color);
  return out;
}

toggle::ToggleResult oracle_toggle(const toggle::ToggleInstance& inst) { return toggle::toggle_brute_force(inst); }

}  // namespace resproc::oracle
