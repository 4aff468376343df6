from collections.abc import Iterator

import yaml

from app.core.exceptions import ConfigurationException


class YmlFileParser:
    @staticmethod
    def parse(file_path: str) -> Iterator[dict]:
        """
        Parse every document of a YAML (or JSON) file.

        Args:
            file_path (str): Path to the file to parse

        Returns:
            Iterator[dict]: Parsed documents, empty documents skipped

        Raises:
            ConfigurationException: If the file cannot be read, is not valid YAML,
                or holds a document that is not a mapping
        """
        try:
            with open(file_path, encoding="utf-8") as f:
                documents = list(yaml.safe_load_all(f))
        except (OSError, UnicodeDecodeError) as e:
            raise ConfigurationException(f"cannot read {file_path}: {e}") from e
        except yaml.YAMLError as e:
            raise ConfigurationException(f"invalid YAML in {file_path}: {e}") from e

        for document in documents:
            if document is None:
                continue
            if not isinstance(document, dict):
                raise ConfigurationException(f"{file_path}: expected a mapping, got {type(document).__name__}")
            yield document
