//! Evaluation metrics: label-based mean accuracy, instance-based
//! accuracy/precision/recall/F1, and confusion-matrix reporting.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{CompGanError, Result};

/// Ground truth / prediction label sets for one instance.
///
/// Single-label classification uses singleton sets; the instance metrics
/// are defined for general label sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSetPair {
    pub truth: BTreeSet<usize>,
    pub predicted: BTreeSet<usize>,
}

impl LabelSetPair {
    pub fn new(truth: impl IntoIterator<Item = usize>, predicted: impl IntoIterator<Item = usize>) -> Self {
        LabelSetPair {
            truth: truth.into_iter().collect(),
            predicted: predicted.into_iter().collect(),
        }
    }

    /// Singleton ground truth and prediction, the usual classification case.
    pub fn single(truth: usize, predicted: usize) -> Self {
        Self::new([truth], [predicted])
    }
}

/// Label-based mean accuracy: averages per-class true-positive and
/// true-negative rates, `(1/2M) * sum_i (TP_i/P_i + TN_i/N_i)`.
///
/// Classes with no positive (or no negative) examples contribute only their
/// defined half-term; the sum is renormalized by the number of defined
/// half-terms instead of `2M`.
pub fn mean_accuracy(pairs: &[LabelSetPair], n_classes: usize) -> Result<f64> {
    if pairs.is_empty() {
        return Err(CompGanError::InvalidConfig(
            "mean_accuracy requires at least one instance".into(),
        ));
    }
    for pair in pairs {
        if pair.truth.is_empty() {
            return Err(CompGanError::InvalidLabel("empty ground-truth label set".into()));
        }
        if let Some(&l) = pair.truth.iter().chain(pair.predicted.iter()).max() {
            if l >= n_classes {
                return Err(CompGanError::InvalidLabel(format!(
                    "label {l} out of range for {n_classes} classes"
                )));
            }
        }
    }

    let mut sum = 0.0;
    let mut terms = 0usize;
    for class in 0..n_classes {
        let mut p = 0usize;
        let mut tp = 0usize;
        let mut n = 0usize;
        let mut tn = 0usize;
        for pair in pairs {
            let in_truth = pair.truth.contains(&class);
            let in_pred = pair.predicted.contains(&class);
            if in_truth {
                p += 1;
                if in_pred {
                    tp += 1;
                }
            } else {
                n += 1;
                if !in_pred {
                    tn += 1;
                }
            }
        }
        if p > 0 {
            sum += tp as f64 / p as f64;
            terms += 1;
        }
        if n > 0 {
            sum += tn as f64 / n as f64;
            terms += 1;
        }
    }
    if terms == 0 {
        return Err(CompGanError::InvalidConfig("no defined mA terms".into()));
    }
    Ok(sum / terms as f64)
}

/// Instance-based accuracy, precision, recall and F1 over label sets.
///
/// acc averages `|Y ∩ f| / |Y ∪ f|`, prec averages `|Y ∩ f| / |f|`
/// (zero when the prediction set is empty), rec averages `|Y ∩ f| / |Y|`,
/// and F1 is the harmonic mean of prec and rec (zero when both are zero).
pub fn instance_metrics(pairs: &[LabelSetPair]) -> Result<(f64, f64, f64, f64)> {
    if pairs.is_empty() {
        return Err(CompGanError::InvalidConfig(
            "instance_metrics requires at least one instance".into(),
        ));
    }
    let m = pairs.len() as f64;
    let mut acc = 0.0;
    let mut prec = 0.0;
    let mut rec = 0.0;
    for pair in pairs {
        if pair.truth.is_empty() {
            return Err(CompGanError::InvalidLabel("empty ground-truth label set".into()));
        }
        let inter = pair.truth.intersection(&pair.predicted).count() as f64;
        let union = pair.truth.union(&pair.predicted).count() as f64;
        acc += inter / union;
        if !pair.predicted.is_empty() {
            prec += inter / pair.predicted.len() as f64;
        }
        rec += inter / pair.truth.len() as f64;
    }
    acc /= m;
    prec /= m;
    rec /= m;
    let f1 = if prec + rec > 0.0 {
        2.0 * prec * rec / (prec + rec)
    } else {
        0.0
    };
    Ok((acc, prec, rec, f1))
}

/// Confusion matrix over singleton-labeled instances; `counts[truth][pred]`.
pub fn confusion(pairs: &[LabelSetPair], n_classes: usize) -> Result<Vec<Vec<usize>>> {
    let mut counts = vec![vec![0usize; n_classes]; n_classes];
    for pair in pairs {
        if pair.truth.len() != 1 || pair.predicted.len() != 1 {
            return Err(CompGanError::InvalidLabel(
                "confusion matrix requires singleton label sets".into(),
            ));
        }
        let t = *pair.truth.iter().next().unwrap();
        let p = *pair.predicted.iter().next().unwrap();
        if t >= n_classes || p >= n_classes {
            return Err(CompGanError::InvalidLabel(format!(
                "label out of range for {n_classes} classes"
            )));
        }
        counts[t][p] += 1;
    }
    Ok(counts)
}

/// Full evaluation report for one attribute head.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct MetricsReport {
    pub acc: f64,
    pub confusion: Vec<Vec<usize>>,
    pub f1: f64,
    pub m_a: f64,
    pub n_classes: usize,
    pub per_class_accuracy: Vec<f64>,
    pub prec: f64,
    pub rec: f64,
}

impl MetricsReport {
    pub fn from_pairs(pairs: &[LabelSetPair], n_classes: usize) -> Result<Self> {
        let m_a = mean_accuracy(pairs, n_classes)?;
        let (acc, prec, rec, f1) = instance_metrics(pairs)?;
        let confusion = confusion(pairs, n_classes)?;
        let per_class_accuracy = (0..n_classes)
            .map(|c| {
                let support: usize = confusion[c].iter().sum();
                if support == 0 {
                    f64::NAN
                } else {
                    confusion[c][c] as f64 / support as f64
                }
            })
            .collect();
        Ok(MetricsReport {
            acc,
            confusion,
            f1,
            m_a,
            n_classes,
            per_class_accuracy,
            prec,
            rec,
        })
    }

    /// Convenience constructor for singleton predictions.
    pub fn from_predictions(truth: &[usize], predicted: &[usize], n_classes: usize) -> Result<Self> {
        if truth.len() != predicted.len() {
            return Err(CompGanError::InvalidConfig(
                "truth and prediction lengths differ".into(),
            ));
        }
        let pairs: Vec<LabelSetPair> = truth
            .iter()
            .zip(predicted)
            .map(|(&t, &p)| LabelSetPair::single(t, p))
            .collect();
        Self::from_pairs(&pairs, n_classes)
    }

    /// Confusion matrix as CSV with class-name headers.
    pub fn confusion_csv(&self, class_names: &[String]) -> String {
        let mut out = String::from("truth\\pred");
        for name in class_names {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, row) in self.confusion.iter().enumerate() {
            out.push_str(class_names.get(i).map(String::as_str).unwrap_or("?"));
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}
