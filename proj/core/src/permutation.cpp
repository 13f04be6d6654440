#include "resproc/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace resproc::perm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n) throw ValidationError("permutation value " + std::to_string(v) + " out of range");
    if (seen[v]) throw ValidationError("permutation value " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(values_.size() + 1, 0);
  for (int i = 0; i < size(); ++i) pos[values_[i]] = i + 1;
  return pos;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

MultiPermutation::MultiPermutation(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v < 1) throw ValidationError("multi-permutation values must be >= 1");
    k_ = std::max(k_, v);
  }
  occurrences_.assign(k_ + 1, {});
  for (int i = 0; i < size(); ++i) occurrences_[values_[i]].push_back(i + 1);
  for (int v = 1; v <= k_; ++v) {
    if (occurrences_[v].empty()) {
      throw ValidationError("value " + std::to_string(v) + " missing from multi-permutation over 1.." +
                            std::to_string(k_));
    }
  }
}

std::vector<int> MultiPermutation::counts() const {
  std::vector<int> c(k_ + 1, 0);
  for (int v = 1; v <= k_; ++v) c[v] = static_cast<int>(occurrences_[v].size());
  return c;
}

std::int64_t OpScript::elementary_operations() const {
  std::int64_t total = 0;
  for (const ScriptStep& step : steps) {
    if (const auto* r = std::get_if<RotationStep>(&step)) {
      total += std::max(std::llabs(r->left_shift), std::llabs(r->right_shift));
    } else {
      ++total;
    }
  }
  return total;
}

const char* script_kind_name(ScriptKind kind) {
  switch (kind) {
    case ScriptKind::kRotationV1: return "rotation-v1";
    case ScriptKind::kRotationV2: return "rotation-v2";
    case ScriptKind::kSwap: return "swap";
    case ScriptKind::kAdjacentSwap: return "adjacent-swap";
    case ScriptKind::kMove: return "move";
  }
  return "unknown";
}

namespace {

// Rotates a[first, last) rightward by `shift` (negative: leftward).
void rotate_range(std::vector<int>& a, int first, int last, std::int64_t shift) {
  const std::int64_t len = last - first;
  if (len <= 1) return;
  const std::int64_t s = ((shift % len) + len) % len;
  if (s == 0) return;
  std::rotate(a.begin() + first, a.begin() + (last - s), a.begin() + last);
}

[[noreturn]] void bad_step(std::size_t index, const std::string& why) {
  throw ValidationError("script step " + std::to_string(index + 1) + ": " + why);
}

}  // namespace

std::vector<int> apply_script(std::vector<int> a, const OpScript& script) {
  const int n = static_cast<int>(a.size());
  auto check_pos = [n](int p, std::size_t idx) {
    if (p < 1 || p > n) bad_step(idx, "position " + std::to_string(p) + " out of range");
  };

  for (std::size_t idx = 0; idx < script.steps.size(); ++idx) {
    const ScriptStep& step = script.steps[idx];
    switch (script.kind) {
      case ScriptKind::kRotationV1: {
        const auto* r = std::get_if<RotationStep>(&step);
        if (!r) bad_step(idx, "expected a rotation step");
        if (script.rotation_case == 1) {
          if (r->split < 0 || r->split > n) bad_step(idx, "split out of range 0..n");
          rotate_range(a, 0, r->split, r->left_shift);
          rotate_range(a, r->split, n, r->right_shift);
        } else {
          if (r->split < 0 || r->split > n + 1) bad_step(idx, "split out of range 0..n+1");
          rotate_range(a, 0, std::max(r->split - 1, 0), r->left_shift);
          rotate_range(a, std::min(r->split, n), n, r->right_shift);
        }
        break;
      }
      case ScriptKind::kRotationV2: {
        const auto* r = std::get_if<ReversalStep>(&step);
        if (!r) bad_step(idx, "expected a reversal step");
        if (r->position < 0 || r->position > n + 1) bad_step(idx, "position out of range 0..n+1");
        std::reverse(a.begin(), a.begin() + std::max(r->position - 1, 0));
        std::reverse(a.begin() + std::min(r->position, n), a.end());
        break;
      }
      case ScriptKind::kSwap: {
        const auto* s = std::get_if<SwapStep>(&step);
        if (!s) bad_step(idx, "expected a swap step");
        check_pos(s->i, idx);
        check_pos(s->j, idx);
        std::swap(a[s->i - 1], a[s->j - 1]);
        break;
      }
      case ScriptKind::kAdjacentSwap: {
        const auto* s = std::get_if<AdjacentSwapStep>(&step);
        if (!s) bad_step(idx, "expected an adjacent-swap step");
        check_pos(s->i, idx);
        check_pos(s->i + 1, idx);
        std::swap(a[s->i - 1], a[s->i]);
        break;
      }
      case ScriptKind::kMove: {
        const auto* m = std::get_if<MoveStep>(&step);
        if (!m) bad_step(idx, "expected a move step");
        check_pos(m->from, idx);
        check_pos(m->to, idx);
        const int v = a[m->from - 1];
        a.erase(a.begin() + (m->from - 1));
        a.insert(a.begin() + (m->to - 1), v);
        break;
      }
    }
  }
  return a;
}

}  // namespace resproc::perm
