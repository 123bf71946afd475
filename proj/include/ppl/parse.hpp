#pragma once

#include <filesystem>
#include <string>

#include "ppl/family.hpp"
#include "ppl/finite_group.hpp"

namespace ppl {

/// Parses a standalone group description:
///   kind cyclic <r> | dihedral <m> | sym <k> | table
/// with `kind table` followed by an `elements ...` line and one
/// `row <element>: ...` line per element.  `#` starts a comment, blank
/// lines are skipped.  `name` becomes the group's display name for
/// table-backed groups.  Throws Error(ParseError) with a line number, or
/// Error(NotAGroup) from validation.
GroupPtr parse_group_text(const std::string& text, const std::string& name);

/// Loads a product description file:
///   n <int>
///   mode strict|lenient          (default strict)
///   group <name> <kindspec>      (auxiliary, usable in later `product` refs)
///   factor <name> <kindspec>
///   factor <name> file <path>    (path relative to the product file)
/// where <kindspec> is `cyclic <r>`, `dihedral <m>`, `sym <k>`,
/// `product <name> <name>` over previously declared names, or `table`
/// followed by its element/row lines.
FactorFamily parse_product_file(const std::filesystem::path& path);

/// Same grammar from memory; `base_dir` anchors `file` references.
FactorFamily parse_product_text(const std::string& text,
                                const std::filesystem::path& base_dir);

}  // namespace ppl
