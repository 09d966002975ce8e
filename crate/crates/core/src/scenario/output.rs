use std::io::Write;

use super::{LinkOutcome, LinkSample};

pub const CSV_HEADER: [&str; 12] = [
    "t_s",
    "link_id",
    "distance_m",
    "elevation_deg",
    "fspl_dB",
    "gaseous_dB",
    "rain_dB",
    "cloud_dB",
    "fog_dB",
    "rx_power_dBm",
    "margin_dB",
    "viable",
];

/// Writes samples as CSV with fixed precision: time and distance to 3
/// decimals, elevation to 6, every dB/dBm column to 4. Columns that cannot
/// be computed for an invalid link are left empty.
pub fn write_csv<W: Write>(samples: &[LinkSample], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    let db = |v: f64| format!("{v:.4}");
    for s in samples {
        let t = format!("{:.3}", s.t_s);
        let row: Vec<String> = match &s.outcome {
            LinkOutcome::Report(r) => vec![
                t,
                s.link_id.clone(),
                format!("{:.3}", r.distance_m),
                format!("{:.6}", r.elevation_deg),
                db(r.fspl_db),
                db(r.gaseous_db),
                db(r.rain_db),
                db(r.cloud_db),
                db(r.fog_db),
                db(r.rx_power_dbm),
                db(r.margin_db),
                r.viable.to_string(),
            ],
            LinkOutcome::Invalid {
                distance_m,
                elevation_deg,
                fspl_db,
                ..
            } => {
                let mut row = vec![
                    t,
                    s.link_id.clone(),
                    format!("{distance_m:.3}"),
                    format!("{elevation_deg:.6}"),
                    fspl_db.map(db).unwrap_or_default(),
                ];
                row.extend(std::iter::repeat_n(String::new(), 6));
                row.push("false".into());
                row
            }
        };
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::tests::REFERENCE;
    use crate::scenario::{simulate, Scenario};

    #[test]
    fn header_and_row_shape() {
        let mut s = Scenario::from_json("reference", REFERENCE).unwrap();
        s.duration_s = 2.0;
        s.timestep_s = 1.0;
        let samples = simulate(&s).unwrap();
        let mut buf = Vec::new();
        write_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "t_s,link_id,distance_m,elevation_deg,fspl_dB,gaseous_dB,rain_dB,cloud_dB,fog_dB,rx_power_dBm,margin_dB,viable"
        );
        let rows: Vec<_> = lines.collect();
        assert_eq!(rows.len(), 2 * s.links.len());
        assert!(rows.iter().all(|r| r.split(',').count() == 12));
        assert!(rows[0].starts_with("0.000,"));
    }

    #[test]
    fn invalid_rows_keep_geometry() {
        let sample = LinkSample {
            t_s: 1.5,
            link_id: "x".into(),
            line_of_sight: None,
            outcome: LinkOutcome::Invalid {
                distance_m: 10.0,
                elevation_deg: 1.0,
                fspl_db: Some(80.0),
                reason: "too flat".into(),
            },
        };
        let mut buf = Vec::new();
        write_csv(&[sample], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "1.500,x,10.000,1.000000,80.0000,,,,,,,false");
    }
}
