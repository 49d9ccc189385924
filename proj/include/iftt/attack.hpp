#pragma once

#include <vector>

#include "iftt/session.hpp"
#include "iftt/types.hpp"

namespace iftt {

/// Observer with the full recording of a session.
///
/// Returns one candidate set per PIN position. TRAD positions are read off
/// directly. ROTH positions intersect the digit sets shown in the pressed
/// button's public color. IFTT positions re-run the consistency inference and
/// carry recovered button colors into later positions. Positions the
/// recording never reached hold the whole digit domain.
///
/// Throws ParseError on a transcript that no session could have produced.
std::vector<DigitSet> decodeTranscript(const Transcript& t);

// True when every position is a single digit.
bool fullyDecoded(const std::vector<DigitSet>& positions);

}  // namespace iftt
