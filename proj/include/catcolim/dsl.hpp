#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catcolim/colimits.hpp"
#include "catcolim/tensor_colimits.hpp"

namespace catcolim {

enum class BlockType { Category, Tensor, Functor, TensorFunctor, Transformation, TensorTransformation, Diagram, Construction };
const char* block_type_name(BlockType t);

struct DiagramBlock {
  bool tensor = false;
  std::vector<std::pair<std::string, std::string>> index;  // index name, category name
  std::vector<std::array<std::string, 3>> order;             // i <= j = functor name
};

// A construction together with the names of its inputs and outputs.
struct ConstructionBlock {
  Kind kind = Kind::Coproduct;
  bool tensor = false;
  Route route = Route::Composite;
  std::vector<std::string> inputs;
  std::string target;
  std::vector<std::string> universal;
  std::vector<std::string> cells;
  friend bool operator==(const ConstructionBlock&, const ConstructionBlock&) = default;
};

// Ordered named blocks. Names are unique across all block types.
class Document {
 public:
  const std::vector<std::pair<BlockType, std::string>>& blocks() const { return blocks_; }

  void add(const std::string& name, CategoryPtr c);
  void add(const std::string& name, TensorPtr t);
  void add(const std::string& name, Functor f);
  void add(const std::string& name, TensorFunctor f);
  void add(const std::string& name, Transformation t);
  void add(const std::string& name, TensorTransformation t);
  void add(const std::string& name, DiagramBlock d);
  void add(const std::string& name, ConstructionBlock c);
  bool has(const std::string& name) const;
  std::optional<BlockType> type_of(const std::string& name) const;
  // `want`, or `want` with primes appended until unused
  std::string fresh(const std::string& want) const;

  // lookups throw UnresolvedReference
  const CategoryPtr& category(const std::string& name) const;
  const TensorPtr& tensor(const std::string& name) const;
  const Functor& functor(const std::string& name) const;
  const TensorFunctor& tensor_functor(const std::string& name) const;
  const Transformation& transformation(const std::string& name) const;
  const TensorTransformation& tensor_transformation(const std::string& name) const;
  const DiagramBlock& diagram(const std::string& name) const;
  const ConstructionBlock& construction(const std::string& name) const;

  // document name of a category or the carrier of a tensor category
  std::string name_of(const CategoryPtr& c) const;
  std::string name_of(const TensorPtr& t) const;
  std::string name_of_functor(const Functor& f) const;  // by value, functor or tensor functor blocks

  // names of all blocks of a type, in order
  std::vector<std::string> names(BlockType t) const;

 private:
  void reserve(const std::string& name, BlockType t);
  std::vector<std::pair<BlockType, std::string>> blocks_;
  std::map<std::string, CategoryPtr> categories_;
  std::map<std::string, TensorPtr> tensors_;
  std::map<std::string, Functor> functors_;
  std::map<std::string, TensorFunctor> tensor_functors_;
  std::map<std::string, Transformation> transformations_;
  std::map<std::string, TensorTransformation> tensor_transformations_;
  std::map<std::string, DiagramBlock> diagrams_;
  std::map<std::string, ConstructionBlock> constructions_;
};

// Errors carry "line:col" of the offending token.
Document parse_document(std::string_view text, const Bounds& bounds = {});
std::string print_document(const Document& d);
// Machine-readable records (JSON), same content and order as the text form.
std::string export_records(const Document& d);
// Same blocks with the same content.
bool same_document(const Document& a, const Document& b);

// Runs the construction a block describes against the document's inputs.
ConstructionResult run_construction(const Document& d, const ConstructionBlock& c);
TensorConstructionResult run_tensor_construction(const Document& d, const ConstructionBlock& c);
// The stored construction: re-derived inputs with the document's target, universal maps and cells.
ConstructionResult load_construction(const Document& d, const std::string& name);
TensorConstructionResult load_tensor_construction(const Document& d, const std::string& name);
// Adds target, universal maps, cells and the construction block (names made fresh).
std::string add_construction(Document& d, ConstructionBlock c, const ConstructionResult& r, const std::string& name = "C");
std::string add_construction(Document& d, ConstructionBlock c, const TensorConstructionResult& r, const std::string& name = "C");

}  // namespace catcolim
