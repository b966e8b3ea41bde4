#pragma once

#include <cmath>
#include <numbers>

namespace hullborne {

// Water level, still or sinusoidally modulated. The level is spatially
// uniform: one height for all (x, y) at a given time.
struct WaterSurface {
    double base_level = 0.0;  // m
    double amplitude = 0.3;   // m
    double frequency = 0.5;   // Hz
    double phase = 0.0;       // rad
    bool enabled = false;     // waves on/off

    static WaterSurface still(double level = 0.0) {
        WaterSurface s;
        s.base_level = level;
        s.enabled = false;
        return s;
    }

    static WaterSurface waves(double level, double amplitude, double frequency,
                              double phase = 0.0) {
        WaterSurface s;
        s.base_level = level;
        s.amplitude = amplitude;
        s.frequency = frequency;
        s.phase = phase;
        s.enabled = true;
        return s;
    }

    double level_at(double t) const {
        if (!enabled) return base_level;
        return base_level + amplitude * std::sin(2.0 * std::numbers::pi * frequency * t + phase);
    }
};

}  // namespace hullborne
