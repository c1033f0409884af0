#include "fer/emotion.hpp"

#include <algorithm>
#include <cctype>

namespace fer {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

constexpr std::array<std::string_view, kEmotionCount> kNames = {
    "Angry", "Disgusted", "Fearful", "Happy", "Neutral", "Sad", "Surprised"};

}  // namespace

const std::array<Emotion, kEmotionCount>& all_emotions() {
    static const std::array<Emotion, kEmotionCount> values = {
        Emotion::Angry,   Emotion::Disgusted, Emotion::Fearful, Emotion::Happy,
        Emotion::Neutral, Emotion::Sad,       Emotion::Surprised};
    return values;
}

std::string_view to_string(Emotion e) { return kNames[static_cast<int>(e)]; }

std::optional<Emotion> parse_emotion(std::string_view label) {
    const std::string needle = lower(label);
    for (int i = 0; i < kEmotionCount; ++i) {
        if (needle == lower(kNames[static_cast<std::size_t>(i)])) return static_cast<Emotion>(i);
    }
    return std::nullopt;
}

std::string_view to_string(Gaze g) {
    switch (g) {
        case Gaze::front: return "front";
        case Gaze::left: return "left";
        case Gaze::right: return "right";
    }
    return "front";
}

std::optional<Gaze> parse_gaze(std::string_view label) {
    const std::string needle = lower(label);
    if (needle == "front" || needle == "frontal") return Gaze::front;
    if (needle == "left") return Gaze::left;
    if (needle == "right") return Gaze::right;
    return std::nullopt;
}

}  // namespace fer
