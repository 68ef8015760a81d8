//! EEG recordings, frequency-band definitions, and band decomposition.
//!
//! A [`RecordingSession`] is one participant-trial multichannel record.
//! [`decompose_bands`] splits it into the ten standard sub-frequency bands
//! (see [`default_bands`]) with zero-phase Butterworth filtering, producing a
//! [`BandStack`] that downstream connectivity code windows into segments.

mod filter;
mod io;
mod synthetic;

pub use filter::{bandpass, decompose_bands, filter_warmup_len};
pub use io::{
    load_recording, read_recording_metadata, scan_recording_dir, write_recording, RecordingFormat,
    RecordingMeta,
};
pub use synthetic::generate_synthetic;

use ndarray::{Array2, Array3};

use crate::error::{Error, Result};

/// One participant-trial multichannel EEG record.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordingSession {
    pub participant_id: u32,
    pub trial_id: u32,
    /// Class index in `[0, L)`; `L` is declared by the dataset, not stored here.
    pub label: usize,
    pub sample_rate_hz: f64,
    pub channel_labels: Vec<String>,
    /// `C x S` matrix of samples in microvolts, one row per channel.
    pub data: Array2<f64>,
}

impl RecordingSession {
    pub fn new(
        participant_id: u32,
        trial_id: u32,
        label: usize,
        sample_rate_hz: f64,
        channel_labels: Vec<String>,
        data: Array2<f64>,
    ) -> Result<Self> {
        let session = RecordingSession {
            participant_id,
            trial_id,
            label,
            sample_rate_hz,
            channel_labels,
            data,
        };
        session.validate()?;
        Ok(session)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sample_rate_hz <= 0.0 || !self.sample_rate_hz.is_finite() {
            return Err(Error::Invalid(format!(
                "sample rate must be positive, got {}",
                self.sample_rate_hz
            )));
        }
        if self.data.nrows() != self.channel_labels.len() {
            return Err(Error::Shape(format!(
                "{} channel labels but {} data rows",
                self.channel_labels.len(),
                self.data.nrows()
            )));
        }
        if self.data.ncols() == 0 {
            return Err(Error::Shape("session has zero samples".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for label in &self.channel_labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::Invalid(format!("duplicate channel label '{label}'")));
            }
        }
        Ok(())
    }

    pub fn n_channels(&self) -> usize {
        self.data.nrows()
    }

    pub fn n_samples(&self) -> usize {
        self.data.ncols()
    }
}

/// Lightweight identifier of a session, carried alongside derived data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SessionRef {
    pub participant_id: u32,
    pub trial_id: u32,
    pub label: usize,
}

impl SessionRef {
    pub fn of(session: &RecordingSession) -> Self {
        SessionRef {
            participant_id: session.participant_id,
            trial_id: session.trial_id,
            label: session.label,
        }
    }
}

/// A named passband. `low_hz == 0` degenerates to a pure low-pass.
#[derive(Debug, Clone, PartialEq)]
pub struct BandDefinition {
    pub name: String,
    pub low_hz: f64,
    pub high_hz: f64,
}

impl BandDefinition {
    pub fn new(name: impl Into<String>, low_hz: f64, high_hz: f64) -> Result<Self> {
        let band = BandDefinition {
            name: name.into(),
            low_hz,
            high_hz,
        };
        band.validate()?;
        Ok(band)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.low_hz >= 0.0 && self.high_hz > self.low_hz) {
            return Err(Error::Invalid(format!(
                "band '{}' has invalid edges [{}, {}]",
                self.name, self.low_hz, self.high_hz
            )));
        }
        Ok(())
    }

    /// Check the upper edge against the Nyquist frequency of `sample_rate_hz`.
    pub fn validate_against_rate(&self, sample_rate_hz: f64) -> Result<()> {
        self.validate()?;
        let nyquist = sample_rate_hz / 2.0;
        if self.high_hz > nyquist {
            return Err(Error::BandExceedsNyquist {
                band: self.name.clone(),
                high_hz: self.high_hz,
                nyquist_hz: nyquist,
            });
        }
        Ok(())
    }
}

/// The ten standard sub-frequency bands, in table order.
///
/// The gaps (3-4 Hz, 9.5-10.5 Hz) and the overlapping composite bands
/// (Alpha, Beta) are intentional; edges are not widened.
pub fn default_bands() -> Vec<BandDefinition> {
    [
        ("Delta", 0.0, 3.0),
        ("Theta", 4.0, 7.0),
        ("Low-alpha", 8.0, 9.5),
        ("High-alpha", 10.5, 12.0),
        ("Alpha", 8.0, 12.0),
        ("Low-beta", 13.0, 16.0),
        ("Mid-beta", 17.0, 20.0),
        ("High-beta", 21.0, 29.0),
        ("Beta", 13.0, 29.0),
        ("Gamma", 30.0, 50.0),
    ]
    .into_iter()
    .map(|(name, low, high)| BandDefinition {
        name: name.to_string(),
        low_hz: low,
        high_hz: high,
    })
    .collect()
}

/// Parse a band-definition override file: one `name low high` triple per line.
/// Blank lines and `#` comments are ignored.
pub fn parse_bands_file(path: &std::path::Path) -> Result<Vec<BandDefinition>> {
    let text = std::fs::read_to_string(path)?;
    let mut bands = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::parse(
                path,
                format!("line {}", lineno + 1),
                "expected 'name low high'",
            ));
        }
        let low: f64 = parts[1].parse().map_err(|_| {
            Error::parse(path, format!("line {}", lineno + 1), "bad low edge")
        })?;
        let high: f64 = parts[2].parse().map_err(|_| {
            Error::parse(path, format!("line {}", lineno + 1), "bad high edge")
        })?;
        bands.push(BandDefinition::new(parts[0], low, high)?);
    }
    if bands.is_empty() {
        return Err(Error::parse(path, "end of file", "no band definitions found"));
    }
    Ok(bands)
}

/// Per-band filtered copies of a session's signals.
#[derive(Debug, Clone)]
pub struct BandStack {
    pub session: SessionRef,
    pub sample_rate_hz: f64,
    pub channel_labels: Vec<String>,
    pub bands: Vec<BandDefinition>,
    /// `B x C x S`; band axis follows the order of `bands`.
    pub data: Array3<f64>,
}

impl BandStack {
    pub fn n_bands(&self) -> usize {
        self.data.dim().0
    }

    pub fn n_channels(&self) -> usize {
        self.data.dim().1
    }

    pub fn n_samples(&self) -> usize {
        self.data.dim().2
    }
}

/// Parameters for the synthetic dataset generator.
///
/// Each class plants a distinct set of disjoint channel pairs; paired channels
/// share a broadband latent source mixed at `coupling_strength` on top of
/// independent noise, so segment-level correlation matrices are
/// class-separable.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n_participants: u32,
    pub n_trials_per_participant: u32,
    pub n_classes: usize,
    pub duration_s: f64,
    pub sample_rate_hz: f64,
    pub n_channels: usize,
    /// Mixing weight of the shared latent source, in `[0, 1]`.
    pub coupling_strength: f64,
    pub noise_sigma: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_participants == 0
            || self.n_trials_per_participant == 0
            || self.n_classes == 0
            || self.n_channels == 0
        {
            return Err(Error::Invalid("synthetic counts must be positive".into()));
        }
        if self.n_trials_per_participant as usize % self.n_classes != 0 {
            return Err(Error::Invalid(format!(
                "trials per participant ({}) must be divisible by class count ({}) for balance",
                self.n_trials_per_participant, self.n_classes
            )));
        }
        if !(self.duration_s > 0.0) || !(self.sample_rate_hz > 0.0) {
            return Err(Error::Invalid("duration and sample rate must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.coupling_strength) {
            return Err(Error::Invalid(format!(
                "coupling_strength {} outside [0, 1]",
                self.coupling_strength
            )));
        }
        if !(self.noise_sigma > 0.0) {
            return Err(Error::Invalid("noise_sigma must be positive".into()));
        }
        Ok(())
    }

    pub fn n_samples(&self) -> usize {
        (self.duration_s * self.sample_rate_hz).round() as usize
    }
}

impl Default for SyntheticSpec {
    /// Desk-scale defaults: small enough that a full pipeline run finishes in
    /// minutes on a laptop CPU.
    fn default() -> Self {
        SyntheticSpec {
            n_participants: 1,
            n_trials_per_participant: 16,
            n_classes: 8,
            duration_s: 20.0,
            sample_rate_hz: 128.0,
            n_channels: 8,
            coupling_strength: 0.8,
            noise_sigma: 1.0,
            seed: 0,
        }
    }
}

/// Apply [`bandpass`] to every channel of `session` for every band in `bands`.
///
/// Band order in the output follows the input list order.
pub fn decompose_bands(session: &RecordingSession, bands: &[BandDefinition]) -> Result<BandStack> {
    filter::decompose_bands_impl(session, bands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array2;

    #[test]
    fn default_bands_match_table() {
        let bands = default_bands();
        assert_eq!(bands.len(), 10);
        assert_eq!(bands[0].name, "Delta");
        assert_eq!(bands[0].low_hz, 0.0);
        assert_eq!(bands[0].high_hz, 3.0);
        assert_eq!(bands[4].name, "Alpha");
        assert_eq!(bands[4].low_hz, 8.0);
        assert_eq!(bands[9].name, "Gamma");
        assert_eq!(bands[9].high_hz, 50.0);
        // every band clears Nyquist at 128 Hz
        for b in &bands {
            b.validate_against_rate(128.0).unwrap();
        }
    }

    #[test]
    fn session_rejects_duplicate_labels() {
        let err = RecordingSession::new(
            0,
            0,
            0,
            128.0,
            vec!["A".into(), "A".into()],
            Array2::zeros((2, 4)),
        );
        assert!(err.is_err());
    }

    #[test]
    fn session_rejects_label_count_mismatch() {
        let err = RecordingSession::new(0, 0, 0, 128.0, vec!["A".into()], Array2::zeros((2, 4)));
        assert!(err.is_err());
    }

    #[test]
    fn band_rejects_inverted_edges() {
        assert!(BandDefinition::new("x", 5.0, 3.0).is_err());
    }

    #[test]
    fn band_nyquist_check() {
        let b = BandDefinition::new("hi", 30.0, 70.0).unwrap();
        assert!(b.validate_against_rate(128.0).is_err());
        assert!(b.validate_against_rate(200.0).is_ok());
    }

    #[test]
    fn synthetic_spec_balance_check() {
        let spec = SyntheticSpec {
            n_trials_per_participant: 10,
            n_classes: 4,
            ..SyntheticSpec::default()
        };
        assert!(spec.validate().is_err());
    }

    #[test]
    fn bands_file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bands.txt");
        std::fs::write(&path, "# custom\nSlow 0 4\nFast 8 20\n").unwrap();
        let bands = parse_bands_file(&path).unwrap();
        assert_eq!(bands.len(), 2);
        assert_eq!(bands[1].name, "Fast");
        assert_eq!(bands[1].low_hz, 8.0);
    }
}
