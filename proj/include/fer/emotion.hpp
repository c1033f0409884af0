#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fer {

// Canonical 7-class taxonomy. The order is alphabetical and is the row/column
// order of every confusion matrix and probability vector in this project.
enum class Emotion : int {
    Angry = 0,
    Disgusted = 1,
    Fearful = 2,
    Happy = 3,
    Neutral = 4,
    Sad = 5,
    Surprised = 6,
};

inline constexpr int kEmotionCount = 7;

const std::array<Emotion, kEmotionCount>& all_emotions();

std::string_view to_string(Emotion e);

// Case-insensitive match against the canonical names; anything else is rejected.
std::optional<Emotion> parse_emotion(std::string_view label);

// Gaze direction, recorded for RaFD-style datasets only.
enum class Gaze : int { front = 0, left = 1, right = 2 };

std::string_view to_string(Gaze g);

// Accepts "front", "frontal", "left", "right" (case-insensitive).
std::optional<Gaze> parse_gaze(std::string_view label);

}  // namespace fer
