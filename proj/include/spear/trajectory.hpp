#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spear/geometry.hpp"

namespace spear {

enum class ActionKind {
  Click,
  Type,
  Scroll,
  PressBack,
  PressHome,
  Enter,
  OpenApp,
  Wait,
  LongPress,
  Complete,
  Impossible,
};

enum class ScrollDirection { Up, Down, Left, Right };

const char* to_string(ActionKind kind);
const char* to_string(ScrollDirection dir);
std::optional<ActionKind> action_kind_from_string(const std::string& name);
std::optional<ScrollDirection> scroll_direction_from_string(const std::string& name);

// One atomic GUI operation. Exactly the fields mandated by `kind` are set;
// validate() rejects anything else.
struct Action {
  ActionKind kind = ActionKind::Wait;
  std::optional<Point> point;                  // Click, LongPress
  std::optional<std::string> text;             // Type
  std::optional<ScrollDirection> direction;    // Scroll
  std::optional<std::string> app_name;         // OpenApp

  bool operator==(const Action&) const = default;

  static Action click(int x, int y);
  static Action long_press(int x, int y);
  static Action type_text(std::string text);
  static Action scroll(ScrollDirection dir);
  static Action open_app(std::string name);
  static Action simple(ActionKind kind);  // PressBack/PressHome/Enter/Wait/Complete/Impossible

  bool needs_point() const { return kind == ActionKind::Click || kind == ActionKind::LongPress; }

  // Throws MalformedDataset naming `where` on any field/kind mismatch.
  void validate(const std::string& where) const;
};

struct LayoutElement {
  Rect bbox;
  std::string label;
  bool operator==(const LayoutElement&) const = default;
};

struct Step {
  int step_idx = 0;
  std::string screenshot_ref;  // relative to the dataset file
  int screen_width = 0;
  int screen_height = 0;
  std::vector<LayoutElement> layout;
  Action gold_action;
  std::optional<Rect> gold_bbox;
  std::optional<std::string> low_level_instruction;

  bool operator==(const Step&) const = default;

  Rect screen_rect() const { return {0, 0, screen_width, screen_height}; }
  void validate(const std::string& where) const;
};

enum class Difficulty { Easy, Medium, Hard };
enum class Scenario { EnvironmentalDistraction, RealWorldAnomaly, AdversarialMisleading };

const char* to_string(Difficulty d);
const char* to_string(Scenario s);
std::optional<Difficulty> difficulty_from_string(const std::string& name);
std::optional<Scenario> scenario_from_string(const std::string& name);

struct Trajectory {
  std::string trajectory_id;
  std::string instruction;
  std::string source;
  std::optional<Difficulty> difficulty;
  std::vector<Step> steps;
  // S-subset annotations: scenario and distraction_action are both present or
  // both absent; distraction_bbox optionally pins the adversary's target box.
  std::optional<Scenario> scenario;
  std::optional<Action> distraction_action;
  std::optional<Rect> distraction_bbox;

  bool operator==(const Trajectory&) const = default;

  bool is_safety_item() const { return scenario.has_value(); }
  void validate() const;
};

struct HistoryEntry {
  int step_idx = 0;
  Action action;
  std::optional<std::string> thought;
  bool operator==(const HistoryEntry&) const = default;
};

struct History {
  std::vector<HistoryEntry> entries;
  bool operator==(const History&) const = default;
};

struct Dataset {
  std::string dataset_id;
  std::vector<Trajectory> trajectories;
  bool operator==(const Dataset&) const = default;
};

enum class AssetCheck { Strict, Lazy };

// Loads and validates a dataset file. In Strict mode every screenshot_ref
// must resolve relative to the dataset file's directory.
Dataset load_dataset(const std::filesystem::path& path, AssetCheck assets = AssetCheck::Lazy);

nlohmann::json dataset_to_json(const Dataset& dataset);
Dataset dataset_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir,
                          AssetCheck assets);
void save_dataset(const std::filesystem::path& path, const Dataset& dataset);

nlohmann::json action_to_json(const Action& action);
Action action_from_json(const nlohmann::json& j, const std::string& where);

// Gold actions of steps 0..upto_step-1, in order (teacher forcing).
History build_history(const Trajectory& trajectory, int upto_step);

// "CLICK(540,1200)" style rendering used in prompts and reports.
std::string describe_action(const Action& action);

}  // namespace spear
