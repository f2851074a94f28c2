//! Small inputs used by the self test, the acceptance suite and the golden files.

use crate::problem_file::ProblemFile;

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub divisor: &'static [&'static str],
    pub ideal: &'static [&'static str],
}

impl Entry {
    pub fn file(&self, mode: &str) -> ProblemFile {
        ProblemFile {
            vars: self.vars.iter().map(|s| s.to_string()).collect(),
            divisor: self.divisor.iter().map(|s| s.to_string()).collect(),
            ideal: self.ideal.iter().map(|s| s.to_string()).collect(),
            mode: mode.to_string(),
            ..ProblemFile::default()
        }
    }

    pub fn is_hypersurface(&self) -> bool {
        self.ideal.len() == 1
    }
}

pub const CORPUS: &[Entry] = &[
    Entry { name: "cusp", vars: &["x", "y"], divisor: &[], ideal: &["x^2 - y^3"] },
    Entry { name: "umbrella", vars: &["x", "y", "z"], divisor: &[], ideal: &["x^2 - y^2*z"] },
    Entry { name: "node", vars: &["x", "y"], divisor: &[], ideal: &["x*y"] },
    Entry { name: "a4", vars: &["x", "y"], divisor: &[], ideal: &["x^2 - y^5"] },
    Entry { name: "e8", vars: &["x", "y"], divisor: &[], ideal: &["x^3 - y^5"] },
    Entry { name: "cross", vars: &["x", "y", "z"], divisor: &[], ideal: &["x^2 - y^2*z^2"] },
    Entry { name: "tacnode", vars: &["x", "y"], divisor: &[], ideal: &["x^2 - y^4"] },
    Entry { name: "log-cusp", vars: &["x", "y"], divisor: &["y"], ideal: &["x^2 - y^3"] },
    Entry { name: "log-node", vars: &["x", "y"], divisor: &["x", "y"], ideal: &["x*y"] },
    Entry { name: "log-umbrella", vars: &["x", "y", "z"], divisor: &["z"], ideal: &["x^2 - y^2*z"] },
    Entry { name: "log-a4", vars: &["x", "y"], divisor: &["y"], ideal: &["x^2 - y^5"] },
    Entry { name: "moved-cusp", vars: &["x", "y"], divisor: &[], ideal: &["(x - 1)^2 - y^3"] },
    Entry { name: "fat-point", vars: &["x", "y"], divisor: &[], ideal: &["x^2", "y^3"] },
];

pub fn get(name: &str) -> Option<&'static Entry> {
    CORPUS.iter().find(|e| e.name == name)
}
