java/Util.JAVA
