#ifndef DICHORD_RENDER_HPP
#define DICHORD_RENDER_HPP

#include <string>

#include "dichord/campaign.hpp"
#include "dichord/chordality.hpp"
#include "dichord/classes.hpp"
#include "dichord/decomposition.hpp"
#include "dichord/forbidden.hpp"

// Output for each certificate kind. JSON output is one object with fields
// "verdict", "class" and "certificate" (see docs/output-schema.md). DOT
// output draws the input digraph with the certificate's vertices filled.
namespace dichord {

enum class Format { Text, Json, Dot };

std::string render_digraph(const Digraph& d, Format f);
std::string render_classification(const Digraph& d, Format f);
std::string render_chordality(const Digraph& d, const ChordalityCertificate& c, Format f);
std::string render_characterization(const Digraph& d, ClassLabel c, const ForbiddenCheck& r,
                                    Format f);
std::string render_not_in_class(const Digraph& d, const ClassWitness& w, Format f);
std::string render_decomposition(const Digraph& d, const DecompTree& t, Format f);
/// DOT is not meaningful for reports and falls back to text.
std::string render_report(const CampaignReport& r, Format f);

}  // namespace dichord

#endif  // DICHORD_RENDER_HPP
