#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spear/image.hpp"
#include "spear/trajectory.hpp"

namespace spear {

enum class PerturbKind {
  Normal,
  Mask,
  ZoomIn,
  Gauss30,
  Gauss50,
  Gauss70,
  StateConflict,
  BadMemory,
  BadKnowledge,
  IrrelevantMemory,
  IrrelevantKnowledge,
};

const char* to_string(PerturbKind kind);
std::optional<PerturbKind> perturb_kind_from_string(const std::string& name);
bool is_visual(PerturbKind kind);
bool is_textual(PerturbKind kind);
const std::vector<PerturbKind>& all_perturb_kinds();     // the ten operators
const std::vector<PerturbKind>& visual_perturb_kinds();  // Mask..Gauss70
const std::vector<PerturbKind>& textual_perturb_kinds();
double gauss_intensity(PerturbKind kind);  // 0.30 / 0.50 / 0.70

enum class NoiseMode { Additive, Blend };
const char* to_string(NoiseMode mode);

struct PerturbParams {
  double mask_fraction = 0.5;
  double crop_fraction = 0.6;
  NoiseMode noise_mode = NoiseMode::Additive;
  double sigma_base = 51.0;  // gray levels at p = 1 in additive mode
};

struct PerturbationSpec {
  PerturbKind kind = PerturbKind::Normal;
  uint64_t seed = 0;
  PerturbParams params;
};

enum class InjectSlot { Memory, Knowledge, Status };
const char* to_string(InjectSlot slot);

struct InjectedText {
  InjectSlot slot = InjectSlot::Memory;
  std::string content;
  bool operator==(const InjectedText&) const = default;
};

// Gold annotations in the output frame. Identical to the source step except
// under ZoomIn, where screen dims, point and bbox are translated to the crop.
struct RemappedGold {
  int screen_width = 0;
  int screen_height = 0;
  Action gold_action;
  std::optional<Rect> gold_bbox;
};

struct PerturbedContext {
  std::string trajectory_id;
  int step_idx = 0;
  PerturbationSpec applied;
  std::optional<Image> screenshot;  // absent = source screenshot unchanged
  RemappedGold remapped_gold;
  std::optional<InjectedText> injected;
  // BadMemory only: the agent's history section is replaced by this order.
  std::optional<std::vector<HistoryEntry>> history_override;
};

// Sentence generator behind StateConflict. The default template keeps the
// whole suite offline; an LLM-backed generator can be plugged in instead.
class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  virtual std::string completed_statement(const std::string& instruction) = 0;
};

class TemplateTextGenerator : public TextGenerator {
 public:
  std::string completed_statement(const std::string& instruction) override;
};

struct MemoryPool {
  std::string version;
  std::vector<std::string> snippets;

  static const MemoryPool& bundled();
  static MemoryPool load(const std::filesystem::path& path);
  uint64_t content_digest() const;
};

PerturbedContext perturb_mask(const Trajectory& trajectory, const Step& step,
                              const Image& screenshot, uint64_t seed, double mask_fraction);

PerturbedContext perturb_zoom(const Trajectory& trajectory, const Step& step,
                              const Image& screenshot, uint64_t seed, double crop_fraction);

PerturbedContext perturb_gauss(const Trajectory& trajectory, const Step& step,
                               const Image& screenshot, uint64_t seed, double intensity,
                               NoiseMode mode, double sigma_base = 51.0);

struct TextualPerturbInput {
  const std::vector<Trajectory>* corpus = nullptr;  // for IrrelevantKnowledge
  size_t trajectory_index = 0;
  int step_idx = 0;
  const History* history = nullptr;  // for BadMemory
};

PerturbedContext perturb_textual(const TextualPerturbInput& input, PerturbKind kind, uint64_t seed,
                                 TextGenerator* generator, const MemoryPool& pool);

struct SkipRecord {
  std::string trajectory_id;
  int step_idx = 0;
  PerturbKind kind = PerturbKind::Normal;
  std::string reason;
};

struct RCorpus {
  std::vector<PerturbedContext> contexts;  // sorted by (trajectory_id, step_idx, kind)
  std::vector<SkipRecord> skips;
};

struct StepRef {
  size_t trajectory_index = 0;
  int step_idx = 0;
};

using ImageLoader = std::function<Image(const Trajectory&, const Step&)>;

// Per-item seeds derive from hash(seed, trajectory_id, step_idx, kind) so any
// single entry can be reproduced without replaying the whole corpus.
RCorpus build_r_corpus(const std::vector<Trajectory>& corpus, const std::vector<StepRef>& steps,
                       const std::vector<PerturbKind>& kinds, uint64_t seed,
                       const PerturbParams& params, const ImageLoader& load_image,
                       TextGenerator* generator = nullptr,
                       const MemoryPool& pool = MemoryPool::bundled());

uint64_t item_seed(uint64_t corpus_seed, const std::string& trajectory_id, int step_idx,
                   PerturbKind kind);

// Corpus manifest: one JSONL line per context. Images referenced by path.
nlohmann::json context_to_manifest_json(const PerturbedContext& ctx,
                                        const std::string& screenshot_path);
PerturbedContext context_from_manifest_json(const nlohmann::json& j, std::string* screenshot_path);

}  // namespace spear
