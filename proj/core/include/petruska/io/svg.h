#ifndef PETRUSKA_IO_SVG_H_
#define PETRUSKA_IO_SVG_H_

#include <string>

#include "petruska/constructions/family.h"

namespace petruska::io {

// One translucent shape per body (palette of nine colours by index), witness
// dots with their label strings, and a legend. Identical families give
// identical bytes.
std::string render_svg(const constructions::ConvexFamily& family);

}  // namespace petruska::io

#endif  // PETRUSKA_IO_SVG_H_
