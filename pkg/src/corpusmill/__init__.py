"""corpusmill: turn raw web-archive crawls into refined text corpora.

Two product lines share one ingest front end:

* monolingual JSONL documents with per-paragraph language tags and
  fluency scores, near-deduplicated and optionally cleaned;
* parallel corpora mined per domain shard via translation-assisted
  document and sentence alignment, released as TMX and plain bitext,
  plus English-pivoted synthetic pairs and corpus overlap reports.
"""

__version__ = "0.1.0"
