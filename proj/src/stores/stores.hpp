#pragma once

#include <memory>

#include "zred/column_store.hpp"

namespace zred::stores {

std::unique_ptr<ColumnStore> make_list_store(const BoundaryMatrix& m);
std::unique_ptr<ColumnStore> make_vector_store(const BoundaryMatrix& m);
std::unique_ptr<ColumnStore> make_set_store(const BoundaryMatrix& m);
std::unique_ptr<ColumnStore> make_heap_store(const BoundaryMatrix& m);
std::unique_ptr<ColumnStore> make_bitmap_store(const BoundaryMatrix& m);

std::unique_ptr<ColumnStore> make_pivot_cache(std::unique_ptr<ColumnStore> base);

}  // namespace zred::stores
